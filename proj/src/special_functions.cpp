#include "ellsurf/special_functions.hpp"

#include <cmath>

#include "ellsurf/errors.hpp"

namespace ellsurf {

void NumericParams::validate() const {
  if (!(std::abs(p) < 1.0)) throw Error(ErrorKind::NonConvergent, "|p| must be < 1");
  if (p == cplx{} || q == cplx{} || eta == cplx{} || eta_prime == cplx{})
    throw Error(ErrorKind::DomainError, "parameters must be nonzero");
  for (const auto& xi : x)
    if (xi == cplx{}) throw Error(ErrorKind::DomainError, "point parameters must be nonzero");
  if (!(truncation_eps > 0.0)) throw Error(ErrorKind::DomainError, "truncation_eps must be positive");
}

int theta_truncation(double abs_p, double abs_z, double eps) {
  const double reach = std::max(abs_z, abs_p / abs_z);
  if (reach <= 0.0) return 1;
  // the tail product differs from 1 by about reach*|p|^N/(1-|p|)
  const double target = eps * 1e-2 * (1.0 - abs_p);
  int n = 1;
  double bound = reach * abs_p;
  while (bound >= target && n < 100000) {
    bound *= abs_p;
    ++n;
  }
  return n;
}

cplx theta_p(cplx p, cplx z, double eps) {
  const double ap = std::abs(p);
  if (!(ap < 1.0)) throw Error(ErrorKind::NonConvergent, "theta_p requires |p| < 1");
  if (z == cplx{}) throw Error(ErrorKind::DomainError, "theta_p at z = 0");
  const int n = theta_truncation(ap, std::abs(z), eps);
  const cplx zinv = 1.0 / z;
  cplx acc{1.0, 0.0};
  cplx pi{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const cplx pnext = pi * p;
    acc *= (1.0 - pi * z) * (1.0 - pnext * zinv);
    pi = pnext;
  }
  return acc;
}

cplx theta_p(cplx p, std::span<const cplx> zs, double eps) {
  cplx acc{1.0, 0.0};
  for (const auto& z : zs) acc *= theta_p(p, z, eps);
  return acc;
}

cplx theta_pochhammer(cplx p, cplx q, cplx z, int k, double eps) {
  if (q == cplx{}) throw Error(ErrorKind::DomainError, "theta_pochhammer with q = 0");
  cplx acc{1.0, 0.0};
  if (k >= 0) {
    cplx w = z;
    for (int j = 0; j < k; ++j) {
      acc *= theta_p(p, w, eps);
      w *= q;
    }
    return acc;
  }
  cplx w = z;
  for (int j = -1; j >= k; --j) {
    w /= q;
    const cplx t = theta_p(p, w, eps);
    if (std::abs(t) < eps * 10.0) throw Error(ErrorKind::PoleHit, "inverted theta factor vanishes");
    acc *= t;
  }
  return 1.0 / acc;
}

cplx elliptic_gamma(cplx p, cplx q, cplx z, double eps) {
  const double ap = std::abs(p), aq = std::abs(q);
  if (!(ap < 1.0)) throw Error(ErrorKind::NonConvergent, "elliptic_gamma requires |p| < 1");
  if (!(aq < 1.0)) throw Error(ErrorKind::DomainError, "elliptic_gamma requires |q| < 1");
  if (z == cplx{}) throw Error(ErrorKind::DomainError, "elliptic_gamma at z = 0");
  const cplx pq = p * q;
  const cplx zinv = 1.0 / z;
  const double az = std::abs(z), apq_z = std::abs(pq) / az;
  const double target = eps * 1e-2 * (1.0 - ap) * (1.0 - aq);
  cplx num{1.0, 0.0}, den{1.0, 0.0};
  cplx pj{1.0, 0.0};
  double apj = 1.0;
  for (int j = 0; apj * std::max(az, apq_z) >= target; ++j) {
    cplx pjqk = pj;
    double mag = apj;
    for (int k = 0; mag * std::max(az, apq_z) >= target; ++k) {
      const cplx d = 1.0 - pjqk * z;
      if (std::abs(d) < eps * 10.0) throw Error(ErrorKind::PoleHit, "elliptic_gamma pole");
      den *= d;
      num *= 1.0 - pjqk * pq * zinv;
      pjqk *= q;
      mag *= aq;
    }
    pj *= p;
    apj *= ap;
    if (j > 100000) throw Error(ErrorKind::NonConvergent, "elliptic_gamma truncation");
  }
  return num / den;
}

cplx elliptic_gamma(cplx p, cplx q, std::span<const cplx> zs, double eps) {
  cplx acc{1.0, 0.0};
  for (const auto& z : zs) acc *= elliptic_gamma(p, q, z, eps);
  return acc;
}

cplx qpoch_inf(cplx x, cplx p, double eps) {
  const double ap = std::abs(p);
  if (!(ap < 1.0)) throw Error(ErrorKind::NonConvergent, "qpoch_inf requires |p| < 1");
  cplx acc{1.0, 0.0};
  cplx term = x;
  while (std::abs(term) >= eps * 1e-2 * (1.0 - ap)) {
    acc *= 1.0 - term;
    term *= p;
  }
  return acc;
}

}  // namespace ellsurf
