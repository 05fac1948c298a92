#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/integrable_dynamics.hpp"

using namespace ellsurf;

TEST_CASE("R maps are involutions and cube delta") {
  Rng rng(21);
  const auto a = RatTensor::random_integer(rng);
  for (int s = 1; s <= 3; ++s) {
    const auto r = apply_R(a, s);
    CHECK(projectively_equal(apply_R(r, s), a));
    const mpq_class d = delta(a, s);
    CHECK(delta(r, s) == d * d * d);
  }
}

TEST_CASE("shift maps commute") {
  Rng rng(22);
  const auto a = RatTensor::random_integer(rng);
  CHECK(projectively_equal(next_vertical(next_horizontal(a)), shift11(a)));
  CHECK(projectively_equal(next_horizontal(next_vertical(a)), shift11(a)));
}

TEST_CASE("Weyl algebra tensor is a fixed point") {
  const auto w = weyl_tensor(1);
  CHECK(projectively_equal(next_vertical(w), w));
  CHECK(projectively_equal(next_horizontal(w), w));
  CHECK(projectively_equal(flip_y2(weyl_tensor(-1)), w));
}

TEST_CASE("degree of the first iterate") {
  Rng rng(23);
  const auto a = RatTensor::random_integer(rng);
  CHECK(iterate_degree(a, 0, rng) == 1);
  CHECK(iterate_degree(a, 1, rng) == 3);
  CHECK(word_degree(a, {1, 2}, rng) == coxeter_degree_entropy({1, 2}).degree);
}

TEST_CASE("Coxeter matrices") {
  const IntMatrix3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int g = 1; g <= 3; ++g) {
    const auto r = reflection_matrix(g);
    CHECK(word_matrix({g, g}) == id);
    CHECK(word_matrix({g}) == r);
  }
  for (long long k = 1; k <= 3; ++k) {
    std::vector<int> w;
    for (long long i = 0; i < k; ++i) w.insert(w.end(), {1, 2});
    const IntMatrix3 expected{
        {{2 * k + 1, -2 * k, 4 * k * k + 2 * k}, {2 * k, 1 - 2 * k, 4 * k * k - 2 * k}, {0, 0, 1}}};
    CHECK(word_matrix(w) == expected);
  }
}

TEST_CASE("degree growth and entropy") {
  const auto t = coxeter_degree_entropy({1, 2});
  CHECK(t.degree == 9);
  CHECK(t.zero_entropy);
  CHECK(t.entropy < 1e-12);
  const auto h = coxeter_degree_entropy({1, 2, 3});
  CHECK_FALSE(h.zero_entropy);
  CHECK(h.entropy > 0.1);
  CHECK(coxeter_degree_entropy({}).degree == 1);
}

TEST_CASE("degenerate flattenings are reported") {
  RatTensor zero;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(apply_R(zero, 1), Error);
  CHECK_THROWS_AS(apply_R(weyl_tensor(1), 4), Error);
}

TEST_CASE("elliptic tensors move by T under translation") {
  Rng rng(24);
  NumericParams params;
  params.p = {0.1, 0.05};
  const cplx q{0.8, -0.5};
  const auto data = random_elliptic_data(params, {0.7, 0.3}, {-0.4, 0.9}, q, rng);
  const auto e = elliptic_tensor(data, rng);
  CHECK(e.residual < 1e-9);
  const auto e2 = elliptic_tensor(shift_first_bundle(data, q), rng);
  CHECK(projective_distance(next_vertical(e.a), e2.a) < 1e-9);
}

TEST_CASE("decomposable vectors") {
  Eigen::Vector4cd v;
  v << 1.0, 2.0, 3.0, 6.0;
  CHECK(decomposability_residual(v) < 1e-15);
  v << 1.0, 0.0, 0.0, 1.0;
  CHECK(decomposability_residual(v) > 0.1);
}
