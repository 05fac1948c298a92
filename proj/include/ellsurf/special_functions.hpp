#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ellsurf {

using cplx = std::complex<double>;

inline constexpr double kDefaultTruncationEps = 1e-14;

// Evaluation context shared by the analytic modules. x holds x0, x1, ..., xm.
struct NumericParams {
  cplx p{0.2, 0.0};
  cplx q{0.5, 0.0};
  cplx eta{1.0, 0.0};
  cplx eta_prime{1.0, 0.0};
  std::vector<cplx> x;
  double truncation_eps = kDefaultTruncationEps;

  // Throws NonConvergent for |p| >= 1 and DomainError for zero entries.
  void validate() const;
};

// Number of factors needed so that |p|^N * max(|z|, |p|/|z|) is below eps.
int theta_truncation(double abs_p, double abs_z, double eps);

// prod_{i>=0} (1 - p^i z)(1 - p^{i+1}/z)
cplx theta_p(cplx p, cplx z, double eps = kDefaultTruncationEps);

// Product of theta_p over several arguments.
cplx theta_p(cplx p, std::span<const cplx> zs, double eps = kDefaultTruncationEps);

// prod_{0<=j<k} theta_p(q^j z); for k < 0 the inverse of prod_{k<=j<0} theta_p(q^j z).
cplx theta_pochhammer(cplx p, cplx q, cplx z, int k, double eps = kDefaultTruncationEps);

// prod_{j,k>=0} (1 - p^{j+1} q^{k+1}/z) / (1 - p^j q^k z), requires |p|, |q| < 1.
cplx elliptic_gamma(cplx p, cplx q, cplx z, double eps = kDefaultTruncationEps);

cplx elliptic_gamma(cplx p, cplx q, std::span<const cplx> zs, double eps = kDefaultTruncationEps);

// (x; p)_infinity
cplx qpoch_inf(cplx x, cplx p, double eps = kDefaultTruncationEps);

}  // namespace ellsurf
