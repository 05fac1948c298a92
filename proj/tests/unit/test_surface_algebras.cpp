#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/surface_algebras.hpp"

using namespace ellsurf;

namespace {

const auto kEven = BlowdownBasis::Even;
const auto kOdd = BlowdownBasis::Odd;

}  // namespace

TEST_CASE("small Hom spaces of the even and odd algebras") {
  Rng rng(11);
  const auto params = random_surface_params(rng, 1);
  CHECK(hom_space_numeric(SurfaceKind::Even, params, DivisorClass::zero(kEven, 0), DivisorClass::sf(kEven, 1, 1)).dim ==
        4);
  CHECK(hom_space_numeric(SurfaceKind::Even, params, DivisorClass::zero(kEven, 0), DivisorClass::sf(kEven, 2, 1)).dim ==
        6);
  CHECK(hom_space_numeric(SurfaceKind::Odd, params, DivisorClass::zero(kOdd, 0), DivisorClass::sf(kOdd, 2, 3)).dim == 9);
  CHECK(hom_space_numeric(SurfaceKind::Odd, params, DivisorClass::zero(kOdd, 0), DivisorClass::sf(kOdd, 3, 1)).dim == 3);
  CHECK(hom_space_numeric(SurfaceKind::Blowup, params, DivisorClass::zero(kEven, 1), DivisorClass::sf(kEven, 1, 2, {1}))
            .dim == 5);
}

TEST_CASE("closed dimension formulas") {
  CHECK(expected_dimension(SurfaceKind::Even, DivisorClass::sf(kEven, 2, 3)) == 12);
  CHECK(expected_dimension(SurfaceKind::Odd, DivisorClass::sf(kOdd, 2, 3)) == 9);
  CHECK(expected_dimension(SurfaceKind::Odd, DivisorClass::sf(kOdd, 4, 1)) == 3);
  CHECK(expected_dimension(SurfaceKind::Even, DivisorClass::sf(kEven, -1, 3)) == 0);
}

TEST_CASE("local parameters translate with the source") {
  NumericParams params;
  params.q = {0.9, 0.1};
  params.eta = 1.3;
  params.eta_prime = 0.7;
  params.x = {1.1, 0.8};
  const auto lp = local_params(params, DivisorClass::sf(kEven, 2, 1, {1}));
  CHECK(std::abs(lp.eta - params.eta / (params.q * params.q)) < 1e-14);
  CHECK(std::abs(lp.eta_prime - params.eta_prime / params.q) < 1e-14);
  CHECK(std::abs(lp.points.at(0) - params.x[1] / params.q) < 1e-14);
}

TEST_CASE("the central element is eta T") {
  Rng rng(12);
  const auto params = random_surface_params(rng, 0);
  const auto c = central_T(params, {0.8, 0.1}, {1.1, -0.2}, {0.9, 0.3}, rng);
  CHECK(c.decomposition_residual < 1e-9);
  for (const cplx z : {cplx{0.6, 0.2}, cplx{-0.4, 0.5}}) {
    CHECK(std::abs(c.op.coeff_at(0, z)) < 1e-9 * std::abs(params.eta));
    CHECK(std::abs(c.op.coeff_at(2, z)) < 1e-9 * std::abs(params.eta));
    CHECK(std::abs(c.op.coeff_at(1, z) / params.eta - 1.0) < 1e-9);
  }
}

TEST_CASE("Fourier transform swaps the degrees and squares to the identity") {
  Rng rng(13);
  const auto params = random_surface_params(rng, 0);
  const std::vector<StepType> steps{StepType::Section, StepType::Fiber, StepType::Diagonal};
  const auto w = random_word(params, 0, 0, steps, rng);
  const auto f = fourier_word(w);
  CHECK(f.target() == DivisorClass::sf(kEven, w.target().f_coeff(), w.target().s_coeff()));
  const auto pts = sample_points(rng, params.p, 4);
  const auto a = sample_word(factorized(w, params.p, params.q), pts);
  const auto b = sample_word(factorized(fourier_word(f), params.p, params.q), pts);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(std::abs(a[k][j] - b[k][j]) < 1e-9 * (1 + std::abs(a[k][j])));
}

TEST_CASE("adjoint words carry the mirrored degree tags") {
  Rng rng(14);
  const auto params = random_surface_params(rng, 0);
  const std::vector<StepType> steps{StepType::Fiber, StepType::Section};
  const auto w = random_word(params, 0, 0, steps, rng);
  const auto a = adjoint_word(w, params.p, params.q);
  REQUIRE(a.factors.size() == 2);
  const auto two = DivisorClass::sf(kEven, 2, 2);
  CHECK(a.factors.front().degree_tag->second == two - w.source());
  CHECK(a.factors.back().degree_tag->first == two - w.target());
}

TEST_CASE("random words span the Hom space") {
  Rng rng(15);
  const auto params = random_surface_params(rng, 0);
  std::vector<OpWord> words;
  for (int i = 0; i < 8; ++i) {
    const std::vector<StepType> steps =
        i % 2 ? std::vector<StepType>{StepType::Diagonal} : std::vector<StepType>{StepType::Section, StepType::Fiber};
    words.push_back(factorized(random_word(params, 0, 0, steps, rng), params.p, params.q));
  }
  CHECK(span_rank(words, 1, params.p, rng) == 4);
}

TEST_CASE("generators of degree s+f factor through f and s") {
  Rng rng(16);
  const auto params = random_surface_params(rng, 0);
  CHECK(surjectivity_check(SurfaceKind::Even, params, DivisorClass::sf(kEven, 0, 1), DivisorClass::sf(kEven, 1, 0)));
}

TEST_CASE("Frobenius functor needs q of finite order") {
  Rng rng(17);
  auto params = random_surface_params(rng, 0);
  try {
    frobenius_functor(params, 2, DiffOp::identity(params.p, params.q));
    FAIL("expected NotTorsion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTorsion);
  }
  params.q = -1.0;
  const DiffOp t = frobenius_functor(params, 2, DiffOp::shift(params.p * params.p, 1.0));
  CHECK(t.order() == 2);
}

TEST_CASE("invalid generator degrees are rejected") {
  Rng rng(18);
  const auto params = random_surface_params(rng, 0);
  CHECK_THROWS_AS(generator_space(SurfaceKind::Even, params, DivisorClass::zero(kEven, 0), DivisorClass::sf(kEven, 2, 0),
                                  rng),
                  Error);
  CHECK_THROWS_AS(generator_space(SurfaceKind::Even, params, DivisorClass::zero(kOdd, 0), DivisorClass::sf(kOdd, 1, 0),
                                  rng),
                  Error);
}
