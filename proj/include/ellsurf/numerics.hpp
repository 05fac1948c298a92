#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "ellsurf/special_functions.hpp"

namespace ellsurf {

using MatrixXc = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

inline constexpr double kRankTol = 1e-8;
inline constexpr double kRankGap = 1e2;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(engine_), n(engine_)};
  }
  // log-uniform radius, uniform angle
  cplx annulus(double rmin, double rmax);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;  // after normalization, descending
};

// Rows are vectors. Columns are scaled to unit max-modulus, rows to unit norm,
// then singular values below tol * largest are dropped. Throws IndeterminateRank
// when the kept/dropped ratio at the cut is below gap.
RankResult numerical_rank(const MatrixXc& rows, double tol = kRankTol, double gap = kRankGap);

// Indices of a maximal independent subset of rows (greedy, pivoted QR on the transpose).
std::vector<int> independent_rows(const MatrixXc& rows, int rank);

// Points in the annulus |p|^{1/2} <= |z| <= 1.
std::vector<cplx> sample_points(Rng& rng, cplx p, int count);

}  // namespace ellsurf
