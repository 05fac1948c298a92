#include "ellsurf/theta_spaces.hpp"

#include <cmath>

#include "ellsurf/errors.hpp"

namespace ellsurf {
namespace {

void verify_independent(const ThetaSpace& space, Rng& rng) {
  if (space.basis.empty()) return;
  const auto pts = sample_points(rng, space.p, 2 * space.dim() + 2);
  const auto res = numerical_rank(sample_matrix(space.basis, pts, space.p));
  if (res.rank != space.dim())
    throw Error(ErrorKind::IndeterminateRank, "theta space basis is numerically dependent");
}

cplx random_zero(Rng& rng, cplx p) { return rng.annulus(std::sqrt(std::abs(p)), 1.0); }

}  // namespace

double ThetaSpace::equation_defect(std::span<const cplx> points) const {
  double worst = 0.0;
  const cplx q{0.5, 0.0};
  for (const auto& f : basis) {
    for (const auto& z : points) {
      const cplx fz = f.eval(z, p, q);
      const double scale = std::abs(fz) + 1e-300;
      if (kind == SpaceKind::Multiplier) {
        const cplx lhs = f.eval(p * z, p, q);
        const cplx rhs = multiplier * std::pow(z, -degree) * fz;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), scale));
      } else {
        const cplx lhs = f.eval(p * z, p, q);
        const cplx rhs = std::pow(eta / (p * z * z), degree) * fz;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), scale));
        worst = std::max(worst, std::abs(f.eval(eta / z, p, q) - fz) / scale);
      }
    }
  }
  return worst;
}

MatrixXc sample_matrix(std::span<const ThetaExpr> fns, std::span<const cplx> points, cplx p, cplx q) {
  MatrixXc m(static_cast<Eigen::Index>(fns.size()), static_cast<Eigen::Index>(points.size()));
  std::vector<cplx> buf(points.size());
  for (std::size_t i = 0; i < fns.size(); ++i) {
    fns[i].eval_batch(points, buf, p, q);
    for (std::size_t j = 0; j < points.size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = buf[j];
  }
  return m;
}

ThetaSpace multiplier_space(const NumericParams& params, cplx multiplier, int k, Rng& rng) {
  ThetaSpace space;
  space.kind = SpaceKind::Multiplier;
  space.multiplier = multiplier;
  space.degree = k;
  space.p = params.p;
  if (k < 0) return space;
  if (k == 0) {
    const double n_real = std::log(std::abs(multiplier)) / std::log(std::abs(params.p));
    const int n = static_cast<int>(std::lround(n_real));
    const double miss = std::abs(multiplier / std::pow(params.p, n) - 1.0);
    if (miss < 1e-9) {
      space.basis.push_back(ThetaExpr::monomial(1.0, n));
    } else if (miss < 1e-6) {
      throw Error(ErrorKind::IndeterminateRank, "degree-0 multiplier neither in nor out of p^Z");
    }
    return space;
  }
  for (int b = 0; b < k; ++b) {
    ThetaExpr f;
    cplx prod{1.0, 0.0};
    for (int i = 0; i + 1 < k; ++i) {
      const cplx a = random_zero(rng, params.p);
      prod *= a;
      f.atoms.push_back(ThetaAtom{1.0 / a, 1, 1, 1});
    }
    const cplx last = (k % 2 == 0 ? 1.0 : -1.0) * multiplier / prod;
    f.atoms.push_back(ThetaAtom{1.0 / last, 1, 1, 1});
    space.basis.push_back(std::move(f));
  }
  verify_independent(space, rng);
  return space;
}

ThetaSpace multiplier_space_vanishing(const NumericParams& params, cplx multiplier, int k,
                                      std::span<const cplx> zeros, Rng& rng) {
  const int m = static_cast<int>(zeros.size());
  ThetaExpr fixed;
  cplx prod{1.0, 0.0};
  for (const auto& z0 : zeros) {
    fixed.atoms.push_back(ThetaAtom{1.0 / z0, 1, 1, 1});
    prod *= z0;
  }
  const cplx reduced = multiplier / ((m % 2 == 0 ? 1.0 : -1.0) * prod);
  ThetaSpace inner = multiplier_space(params, reduced, k - m, rng);
  ThetaSpace space = inner;
  space.multiplier = multiplier;
  space.degree = k;
  for (auto& f : space.basis) f *= fixed;
  return space;
}

ThetaSpace bc1_symmetric_space(const NumericParams& params, cplx eta, int d, Rng& rng) {
  ThetaSpace space;
  space.kind = SpaceKind::Bc1Symmetric;
  space.degree = d;
  space.eta = eta;
  space.p = params.p;
  if (d < 0) return space;
  if (d == 0) {
    space.basis.push_back(ThetaExpr::constant(1.0));
    return space;
  }
  for (int b = 0; b <= d; ++b) {
    ThetaExpr f;
    for (int i = 0; i < d; ++i) {
      const cplx a = random_zero(rng, params.p);
      f.atoms.push_back(ThetaAtom{1.0 / a, 1, 1, 1});
      f.atoms.push_back(ThetaAtom{eta / a, -1, 1, 1});
    }
    space.basis.push_back(std::move(f));
  }
  verify_independent(space, rng);
  return space;
}

int product_map_rank(const ThetaSpace& l1, const ThetaSpace& l2, Rng& rng, double tol) {
  std::vector<ThetaExpr> prods;
  for (const auto& f : l1.basis)
    for (const auto& g : l2.basis) prods.push_back(f * g);
  if (prods.empty()) return 0;
  const auto pts = sample_points(rng, l1.p, 2 * (l1.dim() + l2.dim()));
  return numerical_rank(sample_matrix(prods, pts, l1.p), tol).rank;
}

}  // namespace ellsurf
