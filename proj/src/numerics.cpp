#include "ellsurf/numerics.hpp"

#include <cmath>
#include <numbers>

#include "ellsurf/errors.hpp"

namespace ellsurf {

cplx Rng::annulus(double rmin, double rmax) {
  const double r = std::exp(uniform(std::log(rmin), std::log(rmax)));
  const double t = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, t);
}

namespace {

MatrixXc normalized(const MatrixXc& rows) {
  MatrixXc m = rows;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double s = m.col(j).cwiseAbs().maxCoeff();
    if (s > 0.0) m.col(j) /= s;
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double s = m.row(i).norm();
    if (s > 0.0) m.row(i) /= s;
  }
  return m;
}

}  // namespace

RankResult numerical_rank(const MatrixXc& rows, double tol, double gap) {
  RankResult res;
  if (rows.rows() == 0 || rows.cols() == 0) return res;
  if (!rows.allFinite()) throw Error(ErrorKind::IndeterminateRank, "non-finite samples");
  const MatrixXc m = normalized(rows);
  Eigen::BDCSVD<MatrixXc> svd(m);
  const auto& sv = svd.singularValues();
  res.singular_values.assign(sv.data(), sv.data() + sv.size());
  if (sv.size() == 0 || sv(0) == 0.0) return res;
  const double cut = tol * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  res.rank = r;
  if (r > 0 && r < sv.size() && sv(r) > 0.0 && sv(r - 1) / sv(r) < gap)
    throw Error(ErrorKind::IndeterminateRank,
                "singular value gap " + std::to_string(sv(r - 1) / sv(r)) + " at rank " + std::to_string(r));
  return res;
}

std::vector<int> independent_rows(const MatrixXc& rows, int rank) {
  const MatrixXc m = normalized(rows);
  Eigen::ColPivHouseholderQR<MatrixXc> qr(m.transpose());
  std::vector<int> idx;
  const auto& perm = qr.colsPermutation().indices();
  for (int i = 0; i < rank && i < perm.size(); ++i) idx.push_back(perm(i));
  return idx;
}

std::vector<cplx> sample_points(Rng& rng, cplx p, int count) {
  const double rmin = std::sqrt(std::abs(p));
  std::vector<cplx> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(rng.annulus(rmin, 1.0));
  return pts;
}

}  // namespace ellsurf
