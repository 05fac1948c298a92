#include "ellsurf/integral_transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellsurf/errors.hpp"
#include "ellsurf/simd/kernels.hpp"

namespace ellsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cplx> circle_nodes(double radius, int nodes) {
  std::vector<cplx> w(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) w[static_cast<std::size_t>(j)] = std::polar(radius, kTwoPi * (j + 0.5) / nodes);
  return w;
}

// out[i] *= prod over atoms at (z, w_i)
void multiply_atoms(std::span<const GammaAtom> atoms, cplx z, std::span<const cplx> ws, cplx p, cplx q,
                    std::span<cplx> out) {
  std::vector<cplx> args(ws.size()), vals(ws.size());
  for (const auto& a : atoms) {
    const cplx c = a.coefficient * std::pow(z, a.zpow);
    for (std::size_t i = 0; i < ws.size(); ++i) args[i] = c * std::pow(ws[i], a.wpow);
    simd::gamma_batch(p, q, args, vals, kDefaultTruncationEps);
    for (std::size_t i = 0; i < ws.size(); ++i) out[i] *= a.exp > 0 ? std::pow(vals[i], a.exp) : 1.0 / std::pow(vals[i], -a.exp);
  }
}

// 1 / (Gamma(x) Gamma(1/x)) = theta_p(1/x) theta_q(x), finite on |x| = 1
cplx inverse_gamma_pair(cplx x, cplx p, cplx q) { return theta_p(p, 1.0 / x) * theta_p(q, x); }

// Gamma(w/pq x0) and Gamma(eta/w x0) in the atom list
constexpr std::size_t kX0Atoms[2] = {6, 7};

bool in_pq_nonneg(cplx x, cplx p, cplx q) {
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 60; ++j) {
      const cplx v = std::pow(p, i) * std::pow(q, j);
      if (std::abs(v) < 1e-300) break;
      if (std::abs(x - v) <= 1e-12 * std::abs(v)) return true;
    }
  return false;
}

}  // namespace

KernelForm kernel_form(const KernelParams& kp) {
  const cplx pq = kp.p * kp.q;
  if (in_pq_nonneg(kp.x0 / (pq * kp.x1), kp.p, kp.q))
    throw Error(ErrorKind::PoleHit, "x0/(pq x1) lies in p^N q^N");
  KernelForm k;
  k.constant = qpoch_inf(kp.p, kp.p) * qpoch_inf(kp.q, kp.q) / (2.0 * elliptic_gamma(kp.p, kp.q, kp.x0 / kp.x1));
  const cplx eta = kp.eta, x0 = kp.x0, x1 = kp.x1;
  k.atoms = {
      {1.0, 1, -1, 1},
      {1.0 / (pq * eta), 1, 1, 1},
      {pq * eta * x0 / x1, -1, -1, 1},
      {x0 / x1, -1, 1, 1},
      {x1 / eta, 0, 1, 1},
      {pq * x1, 0, -1, 1},
      {1.0 / (pq * x0), 0, 1, 1},
      {eta / x0, 0, -1, 1},
      {x1 / eta, 1, 0, -1},
      {pq * x0, -1, 0, -1},
      {1.0 / (pq * x1), 1, 0, -1},
      {eta * x0 / (x1 * x1), -1, 0, -1},
      {1.0 / (pq * eta), 0, 2, -1},
      {pq * eta, 0, -2, -1},
  };
  return k;
}

cplx kernel_K(cplx z, cplx w, const KernelParams& kp) {
  const KernelForm k = kernel_form(kp);
  cplx out = k.constant;
  for (const auto& a : k.atoms) {
    const cplx g = elliptic_gamma(kp.p, kp.q, a.coefficient * std::pow(z, a.zpow) * std::pow(w, a.wpow));
    out *= a.exp > 0 ? std::pow(g, a.exp) : 1.0 / std::pow(g, -a.exp);
  }
  return out;
}

PoleFamilies kernel_pole_families(const KernelParams& kp, cplx z, bool include_x0_families) {
  const cplx pq = kp.p * kp.q;
  PoleFamilies f;
  const auto atoms = kernel_form(kp).atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& a = atoms[i];
    if (a.wpow == 0) continue;
    if (!include_x0_families && (i == kX0Atoms[0] || i == kX0Atoms[1])) continue;
    const cplx c = a.coefficient * std::pow(z, a.zpow);
    const int k = std::abs(a.wpow);
    // poles of Gamma(y) at y = p^-i q^-j; of 1/Gamma(y) at y = p^{i+1} q^{j+1}
    const cplx y = a.exp > 0 ? cplx{1.0, 0.0} : pq;
    cplx base = a.wpow > 0 ? y / c : c / y;
    if (k == 2) base = std::sqrt(base);
    const bool shrinking = (a.wpow < 0) == (a.exp > 0);
    (shrinking ? f.inner : f.outer).push_back(base);
  }
  return f;
}

double separating_radius(const PoleFamilies& families, double margin) {
  double r_in = 0.0, r_out = INFINITY;
  for (auto b : families.inner) r_in = std::max(r_in, std::abs(b));
  for (auto b : families.outer) r_out = std::min(r_out, std::abs(b));
  if (!(r_in * (1.0 + margin) * (1.0 + margin) < r_out))
    throw Error(ErrorKind::ContourPinch, "no circle separates the pole families (" + std::to_string(r_in) + " vs " +
                                             std::to_string(r_out) + ")");
  if (r_in == 0.0) return r_out / (1.0 + margin) / (1.0 + margin);
  if (std::isinf(r_out)) return r_in * (1.0 + margin) * (1.0 + margin);
  return std::sqrt(r_in * r_out);
}

cplx circle_average(const std::function<void(std::span<const cplx>, std::span<cplx>)>& f, double radius, int nodes) {
  const auto w = circle_nodes(radius, nodes);
  std::vector<cplx> vals(w.size());
  f(w, vals);
  const std::vector<cplx> ones(w.size(), cplx{1.0, 0.0});
  return simd::dot(ones, vals) / static_cast<double>(nodes);
}

TransformValues contour_apply(const KernelParams& kp, const std::function<cplx(cplx)>& g, std::span<const cplx> zs,
                              const ContourSpec& spec) {
  const KernelForm k = kernel_form(kp);
  TransformValues out;
  for (const cplx z : zs) {
    PoleFamilies fam = kernel_pole_families(kp, z, !spec.g_cancels_x0_families);
    fam.inner.insert(fam.inner.end(), spec.extra.inner.begin(), spec.extra.inner.end());
    fam.outer.insert(fam.outer.end(), spec.extra.outer.begin(), spec.extra.outer.end());
    double r = separating_radius(fam, spec.excluded_pole_margin);
    if (spec.radius > 0.0) {
      double r_in = 0.0, r_out = INFINITY;
      for (auto b : fam.inner) r_in = std::max(r_in, std::abs(b));
      for (auto b : fam.outer) r_out = std::min(r_out, std::abs(b));
      if (!(spec.radius > r_in * (1.0 + spec.excluded_pole_margin) && spec.radius * (1.0 + spec.excluded_pole_margin) < r_out))
        throw Error(ErrorKind::ContourPinch, "requested radius does not separate the pole families");
      r = spec.radius;
    }
    out.radius = r;
    auto integrand = [&](std::span<const cplx> ws, std::span<cplx> vals) {
      for (std::size_t i = 0; i < ws.size(); ++i) vals[i] = k.constant * g(ws[i]);
      multiply_atoms(k.atoms, z, ws, kp.p, kp.q, vals);
    };
    const cplx coarse = circle_average(integrand, r, spec.nodes);
    const cplx fine = circle_average(integrand, r, 2 * spec.nodes);
    if (std::abs(fine) > 0.0) out.doubling_error = std::max(out.doubling_error, std::abs(fine - coarse) / std::abs(fine));
    out.values.push_back(fine);
  }
  return out;
}

void beta_integrand(std::span<const cplx> t, cplx p, cplx q, std::span<const cplx> z, std::span<cplx> out) {
  std::vector<cplx> args(z.size()), vals(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = theta_p(p, 1.0 / (z[i] * z[i])) * theta_p(q, z[i] * z[i]);
  for (const cplx ti : t)
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < z.size(); ++i) args[i] = ti * std::pow(z[i], sign);
      simd::gamma_batch(p, q, args, vals, kDefaultTruncationEps);
      for (std::size_t i = 0; i < z.size(); ++i) out[i] *= vals[i];
    }
}

cplx beta_closed_form(std::span<const cplx> t, cplx p, cplx q) {
  cplx out{1.0, 0.0};
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) out *= elliptic_gamma(p, q, t[i] * t[j]);
  return out;
}

BetaResult beta_integral(std::span<const cplx> t, cplx p, cplx q, double tol, int max_nodes) {
  if (t.size() != 6) throw Error(ErrorKind::DomainError, "the beta integral takes six parameters");
  cplx prod{1.0, 0.0};
  for (auto x : t) {
    if (!(std::abs(x) < 1.0)) throw Error(ErrorKind::ContourPinch, "|t_i| >= 1: the unit circle does not separate the poles");
    prod *= x;
  }
  if (std::abs(prod - p * q) > 1e-12 * std::abs(p * q)) throw Error(ErrorKind::DomainError, "prod t_i != pq");
  const cplx scale = qpoch_inf(p, p) * qpoch_inf(q, q) / 2.0;
  auto f = [&](std::span<const cplx> z, std::span<cplx> out) { beta_integrand(t, p, q, z, out); };
  BetaResult r;
  r.closed_form = beta_closed_form(t, p, q);
  int n = 32;
  cplx prev = scale * circle_average(f, 1.0, n);
  for (;;) {
    n *= 2;
    const cplx cur = scale * circle_average(f, 1.0, n);
    r.doubling_error = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    r.value = cur;
    r.nodes = n;
    if (r.doubling_error <= tol || n >= max_nodes) break;
    prev = cur;
  }
  return r;
}

cplx fourier_kernel(cplx z, cplx w, const NumericParams& params) {
  const cplx p = params.p, q = params.q, eta = params.eta, etap = params.eta_prime;
  const cplx thetas = theta_p(q, z) * theta_p(q, q * eta / z) / (theta_p(q, w) * theta_p(q, q * etap / w));
  const std::array<cplx, 4> num = {z / w, q * eta / (z * w), z * w / (q * etap), w * eta / (etap * z)};
  return thetas * elliptic_gamma(p, q, num) * inverse_gamma_pair(w * w / (q * etap), p, q) /
         elliptic_gamma(p, q, eta / etap);
}

AnnihilationSetup random_annihilation_setup(Rng& rng) {
  AnnihilationSetup s;
  auto phase = [&] { return std::polar(1.0, rng.uniform(0.0, kTwoPi)); };
  s.params.p = 0.05 * phase();
  s.params.q = 0.3 * phase();
  s.params.eta = 0.3 * phase();
  s.params.eta_prime = phase() / s.params.q;
  for (auto& a : s.a) a = rng.uniform(0.75, 0.85) * phase();
  return s;
}

DiffOp annihilation_operator(const AnnihilationSetup& s) {
  const cplx p = s.params.p, q = s.params.q, eta = s.params.eta, etap = s.params.eta_prime;
  ThetaExpr b;
  b.zpow = -1;
  for (auto a : s.a) b.atoms.push_back(ThetaAtom{a, 1, 1, 1});
  b.atoms.push_back(ThetaAtom{q * s.a[0] * s.a[1] * s.a[2] * eta * etap, -1, 1, 1});
  return op_D(p, q, eta, b);
}

cplx annihilation_solution(const AnnihilationSetup& s, cplx w) {
  const cplx p = s.params.p, q = s.params.q, eta = s.params.eta, etap = s.params.eta_prime;
  const cplx a123 = s.a[0] * s.a[1] * s.a[2];
  cplx num = theta_p(q, w) * theta_p(q, q * etap / w);
  for (auto a : s.a) num *= elliptic_gamma(p, q, a * w) * elliptic_gamma(p, q, q * a * etap / w);
  return num / (elliptic_gamma(p, q, q * q * a123 * eta * etap / w) * elliptic_gamma(p, q, q * a123 * eta * w));
}

AnnihilationResult annihilation_check(const AnnihilationSetup& s, std::span<const cplx> zs,
                                      const std::function<cplx(cplx)>& modifier, int nodes) {
  const cplx q = s.params.q;
  // the integrand is a beta integrand in w / sqrt(q eta'); its poles are separated
  // by |w| = |q eta'|^{1/2} when every parameter has modulus below one
  const double radius = std::sqrt(std::abs(q * s.params.eta_prime));
  AnnihilationResult out;
  auto transform = [&](cplx z, int n) {
    auto f = [&](std::span<const cplx> ws, std::span<cplx> vals) {
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const cplx m = modifier ? modifier(ws[i]) : cplx{1.0, 0.0};
        vals[i] = m == cplx{} ? cplx{} : m * fourier_kernel(z, ws[i], s.params) * annihilation_solution(s, ws[i]);
      }
    };
    return circle_average(f, radius, n);
  };
  const DiffOp op = annihilation_operator(s);
  for (const cplx z : zs) {
    for (const cplx y : {z, q * z}) {
      const double inner = std::max(std::abs(y), std::abs(q * s.params.eta / y)) / radius;
      if (!(inner < 1.0)) throw Error(ErrorKind::ContourPinch, "z outside the admissible annulus");
    }
    const cplx i0 = transform(z, 2 * nodes);
    const cplx i1 = transform(q * z, 2 * nodes);
    const cplx i0c = transform(z, nodes);
    if (std::abs(i0) > 0.0) out.doubling_error = std::max(out.doubling_error, std::abs(i0 - i0c) / std::abs(i0));
    const cplx t0 = op.coeff_at(0, z) * i0;
    const cplx t1 = op.coeff_at(1, z) * i1;
    const double scale = std::abs(t0) + std::abs(t1);
    if (scale > 0.0) out.residual = std::max(out.residual, std::abs(t0 + t1) / scale);
  }
  return out;
}

}  // namespace ellsurf
