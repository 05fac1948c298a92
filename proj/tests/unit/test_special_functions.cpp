#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/numerics.hpp"
#include "ellsurf/special_functions.hpp"

using namespace ellsurf;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

// Reference values from 30-digit truncated products (200 theta factors, 60x60 gamma factors).
TEST_CASE("theta_p matches high-precision products") {
  CHECK(rel(theta_p({0.2, 0.1}, {0.7, -0.3}), {0.26145948303594263, 0.10826864218213328}) < 1e-13);
  CHECK(rel(theta_p({-0.35, 0.2}, {1.3, 0.4}), {-0.516823951500597, -0.6180571064699736}) < 1e-13);
  CHECK(rel(theta_p({0.05, 0.0}, {-0.6, 0.9}), {1.6917616116928111, -0.96619514191029387}) < 1e-13);
}

TEST_CASE("elliptic_gamma matches high-precision products") {
  CHECK(rel(elliptic_gamma({0.2, 0.1}, {0.3, -0.2}, {0.7, 0.3}), {2.2469088605074252, 2.950732511365644}) < 1e-12);
  CHECK(rel(elliptic_gamma({-0.25, 0.1}, {0.4, 0.1}, {1.2, -0.5}), {-0.96002733138431519, -4.1623405661980507}) <
        1e-12);
}

TEST_CASE("theta_pochhammer for positive and negative length") {
  const cplx p{0.2, 0.1}, q{0.3, -0.2}, z{0.7, 0.3};
  CHECK(rel(theta_pochhammer(p, q, z, 3), {-0.13938259960894096, 0.20038745108958215}) < 1e-13);
  CHECK(rel(theta_pochhammer(p, q, z, -2), {-0.014706938172051974, -0.033419580882786144}) < 1e-13);
  CHECK(theta_pochhammer(p, q, z, 0) == cplx{1.0, 0.0});
}

TEST_CASE("functional equations at random points") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const cplx p = rng.annulus(0.05, 0.5), q = rng.annulus(0.05, 0.5), z = rng.annulus(0.3, 3.0);
    const cplx th = theta_p(p, z);
    CHECK(rel(theta_p(p, p * z), -th / z) < 1e-10);
    CHECK(rel(theta_p(p, p / z), th) < 1e-10);
    const cplx g = elliptic_gamma(p, q, z);
    CHECK(rel(elliptic_gamma(p, q, q * z), th * g) < 1e-10);
    CHECK(rel(elliptic_gamma(p, q, p * z), theta_p(q, z) * g) < 1e-10);
    CHECK(std::abs(g * elliptic_gamma(p, q, p * q / z) - 1.0) < 1e-10);
  }
}

TEST_CASE("theta_p vanishes on p^Z") {
  const cplx p{0.3, 0.1};
  CHECK(std::abs(theta_p(p, 1.0)) < 1e-15);
  CHECK(std::abs(theta_p(p, p)) < 1e-15);
}

TEST_CASE("multi-argument products") {
  const cplx p{0.2, 0.05}, q{0.3, 0.0};
  const std::vector<cplx> zs{{0.5, 0.1}, {1.2, -0.4}};
  CHECK(rel(theta_p(p, zs), theta_p(p, zs[0]) * theta_p(p, zs[1])) < 1e-14);
  CHECK(rel(elliptic_gamma(p, q, zs), elliptic_gamma(p, q, zs[0]) * elliptic_gamma(p, q, zs[1])) < 1e-14);
}

TEST_CASE("truncation length grows as |p| approaches 1") {
  CHECK(theta_truncation(0.1, 1.0, 1e-14) < theta_truncation(0.9, 1.0, 1e-14));
  CHECK(theta_truncation(0.0, 1.0, 1e-14) >= 1);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(theta_p(1.0, 0.5), Error);
  try {
    theta_p(1.2, 0.5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergent);
  }
  try {
    elliptic_gamma(0.2, 0.3, 0.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  try {
    elliptic_gamma(0.2, 0.3, 1.0);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
  NumericParams bad;
  bad.p = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
}
