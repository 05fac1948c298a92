#include <numbers>

#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/integral_transforms.hpp"

using namespace ellsurf;

namespace {

std::vector<cplx> beta_params(cplx p, cplx q) {
  std::vector<cplx> t{{0.6, 0.0}, {0.0, 0.7}, {-0.65, 0.0}, {0.62, 0.1}, {0.7, 0.0}};
  cplx prod = 1.0;
  for (const auto& x : t) prod *= x;
  t.push_back(p * q / prod);
  return t;
}

}  // namespace

TEST_CASE("elliptic beta integral") {
  const cplx p{0.2, 0.0}, q{0.25, 0.0};
  const auto b = beta_integral(beta_params(p, q), p, q);
  CHECK(std::abs(b.value - b.closed_form) < 1e-10 * std::abs(b.closed_form));
  CHECK(b.doubling_error < 1e-9);
  // closed form value from the same parameters, computed independently at 30 digits
  CHECK(std::abs(b.closed_form - cplx{-0.7150767119438637, -0.43326444928034846}) < 1e-12);
}

TEST_CASE("beta integral preconditions") {
  const cplx p{0.2, 0.0}, q{0.25, 0.0};
  auto t = beta_params(p, q);
  t[0] *= 2.0;
  CHECK_THROWS_AS(beta_integral(t, p, q), Error);
  t.pop_back();
  CHECK_THROWS_AS(beta_integral(t, p, q), Error);
  auto big = beta_params(p, q);
  big[0] = 1.2;
  big[5] = p * q / (big[0] * big[1] * big[2] * big[3] * big[4]);
  try {
    beta_integral(big, p, q);
    FAIL("expected ContourPinch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContourPinch);
  }
}

TEST_CASE("kernel symmetries") {
  const KernelParams kp{{0.9, 0.3}, {1.2, -0.1}, {0.8, 0.4}, {0.1, 0.05}, {0.2, -0.1}};
  const cplx z{0.7, 0.2}, w{1.1, -0.3};
  const cplx k = kernel_K(z, w, kp);
  CHECK(std::abs(kernel_K(z, kp.p * kp.q * kp.eta / w, kp) - k) < 1e-10 * std::abs(k));
  KernelParams kp2 = kp;
  kp2.eta = 1.0 / (kp.p * kp.q);
  const cplx k2 = kernel_K(z, w, kp2);
  CHECK(std::abs(kernel_K(kp2.x0 / (kp2.x1 * z), w, kp2) - k2) < 1e-10 * std::abs(k2));
}

TEST_CASE("kernel pole at the excluded ratio") {
  KernelParams kp{{0.9, 0.3}, {1.0, 0.0}, {1.0, 0.0}, {0.1, 0.0}, {0.2, 0.0}};
  kp.x0 = kp.p * kp.q * kp.x1;
  try {
    kernel_form(kp);
    FAIL("expected PoleHit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
}

TEST_CASE("separating radius") {
  PoleFamilies f;
  f.inner = {0.1};
  f.outer = {10.0};
  const double r = separating_radius(f, 0.02);
  CHECK(r == doctest::Approx(1.0));
  f.outer = {0.05};
  CHECK_THROWS_AS(separating_radius(f, 0.02), Error);
}

TEST_CASE("trapezoid rule on circles") {
  // mean of w^0 + w over the circle is 1
  const auto f = [](std::span<const cplx> w, std::span<cplx> out) {
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = 1.0 + w[i];
  };
  CHECK(std::abs(circle_average(f, 0.7, 16) - 1.0) < 1e-14);
}

TEST_CASE("the transform of a solution is annihilated") {
  Rng rng(51);
  const auto s = random_annihilation_setup(rng);
  std::vector<cplx> zs;
  for (int i = 0; i < 4; ++i) zs.push_back(rng.annulus(0.45, 0.9));
  CHECK(annihilation_check(s, zs).residual < 1e-6);
  CHECK(annihilation_check(s, zs, [](cplx w) { return w; }).residual > 1e-2);
}
