#include "doctest.h"
#include "ellsurf/difference_operators.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/numerics.hpp"
#include "ellsurf/sampled_ops.hpp"

using namespace ellsurf;

namespace {

const cplx kP{0.15, 0.05};
const cplx kQ{0.8, 0.3};

DiffOp random_op(Rng& rng, int order) {
  DiffOp op = DiffOp::multiplication(kP, kQ, ThetaExpr::thetas({rng.annulus(0.6, 1.5)}));
  for (int k = 1; k <= order; ++k)
    op = op + compose(DiffOp::multiplication(kP, kQ, ThetaExpr::thetas({rng.annulus(0.6, 1.5)})),
                      DiffOp::shift(kP, kQ, k));
  return op;
}

}  // namespace

TEST_CASE("composition agrees with successive application") {
  Rng rng(1);
  const DiffOp a = random_op(rng, 2), b = random_op(rng, 1);
  const DiffOp ab = compose(a, b);
  CHECK(ab.order() == 3);
  const ScalarFn f = [](cplx z) { return std::exp(z) + z * z; };
  const ScalarFn bf = [&](cplx z) { return apply(b, f, z); };
  for (const cplx z : {cplx{0.6, 0.2}, cplx{-0.3, 0.8}})
    CHECK(std::abs(apply(ab, f, z) - apply(a, bf, z)) < 1e-12 * std::abs(apply(ab, f, z)));
}

TEST_CASE("composition is associative") {
  Rng rng(2);
  const DiffOp a = random_op(rng, 1), b = random_op(rng, 1), c = random_op(rng, 1);
  const auto pts = sample_points(rng, kP, 5);
  const auto l = sample_op(compose(compose(a, b), c), pts);
  const auto r = sample_op(compose(a, compose(b, c)), pts);
  for (std::size_t k = 0; k < l.size(); ++k)
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(std::abs(l[k][j] - r[k][j]) < 1e-11 * (1 + std::abs(l[k][j])));
}

TEST_CASE("sampled words agree with the closed-form product") {
  Rng rng(3);
  OpWord w;
  for (int i = 0; i < 3; ++i) w.factors.push_back(random_op(rng, 1));
  const auto pts = sample_points(rng, kP, 4);
  const auto direct = sample_op(realize(w), pts);
  const auto lazy = sample_word(w, pts);
  CHECK(w.order() == 3);
  for (std::size_t k = 0; k < direct.size(); ++k)
    for (std::size_t j = 0; j < pts.size(); ++j)
      CHECK(std::abs(direct[k][j] - lazy[k][j]) < 1e-11 * (1 + std::abs(direct[k][j])));
}

TEST_CASE("op_D has the stated coefficients") {
  const cplx eta{0.9, 0.2};
  const ThetaSum b = ThetaExpr::thetas({0.7});
  const DiffOp d = op_D(kP, kQ, eta, b);
  const cplx z{0.6, 0.3};
  const cplx pre = z / theta_p(kP, z * z / eta);
  CHECK(std::abs(d.coeff_at(0, z) - pre * b.eval(z, kP, kQ)) < 1e-12);
  CHECK(std::abs(d.coeff_at(1, z) + pre * b.eval(eta / z, kP, kQ)) < 1e-12);
}

TEST_CASE("lowering operators") {
  const cplx eta{0.9, 0.2};
  CHECK(lowering_Dl(kP, kQ, 0, eta).order() == 0);
  CHECK(lowering_Dl(kP, kQ, 3, eta).order() == 3);
  CHECK_THROWS_AS(lowering_Dl(kP, kQ, -1, eta), Error);
  try {
    // q^2 = 1 makes a normalizing theta factor vanish
    lowering_Dl(kP, -1.0, 3, eta);
    FAIL("expected TorsionDegenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TorsionDegenerate);
  }
}

TEST_CASE("adjoint is an involution with the mirrored degrees") {
  Rng rng(4);
  const cplx eta{0.9, 0.2};
  const DiffOp a = random_op(rng, 2);
  const DiffOp back = adjoint(adjoint(a, eta, 0, 2), eta, 0, 2);
  const auto pts = sample_points(rng, kP, 5);
  for (int k = 0; k <= 2; ++k)
    for (const auto& z : pts) CHECK(std::abs(back.coeff_at(k, z) - a.coeff_at(k, z)) < 1e-10 * (1 + std::abs(a.coeff_at(k, z))));
}

TEST_CASE("gamma gauge multiplies by theta-Pochhammer symbols") {
  Rng rng(5);
  const DiffOp a = random_op(rng, 1);
  const cplx x{1.1, -0.2}, z{0.7, 0.1};
  const DiffOp g = gamma_gauge(a, x, 2, 1);
  for (int k = 0; k <= 1; ++k)
    CHECK(std::abs(g.coeff_at(k, z) - a.coeff_at(k, z) * theta_pochhammer(kP, kQ, kQ * z / x, 1 + k)) <
          1e-12 * std::abs(g.coeff_at(k, z)));
}
