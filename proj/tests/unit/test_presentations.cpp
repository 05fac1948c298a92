#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/presentations.hpp"
#include "ellsurf/surface_algebras.hpp"

using namespace ellsurf;

TEST_CASE("monomial counts on the plane") {
  CHECK(monomial_count(PnDivisor::h(2)) == 3);
  CHECK(monomial_count(PnDivisor::e(2, 1)) == 1);
  CHECK(monomial_count(PnDivisor{2, 2, {1, 1, 1}}) == 3);
}

TEST_CASE("divisor arithmetic") {
  const auto h = PnDivisor::h(2);
  CHECK(h.kappa() == 3);
  CHECK(h.self_intersection() == 1);
  CHECK(PnDivisor::f(2, 1) == h - PnDivisor::e(2, 2) - PnDivisor::e(2, 3));
  CHECK(pairing(PnDivisor::e(2, 1), PnDivisor::e(2, 1)) == -1);
  CHECK(generator_degree(2, 0) == PnDivisor::e(2, 1));
  CHECK(generator_degree(2, 3) == PnDivisor::f(2, 1));
  CHECK_THROWS_AS(generator_degree(2, 6), Error);
}

TEST_CASE("ordered exponents count the monomials") {
  for (int t = 0; t <= 3; ++t) {
    long long total = 0;
    for (const auto& e : ordered_exponents(2, t)) {
      int s = 0;
      for (int x : e) s += x;
      CHECK(s == t);
      ++total;
    }
    const long long expected[] = {1, 6, 21, 56};
    CHECK(total == expected[t]);
  }
}

TEST_CASE("dimensions of the product pieces") {
  const std::vector<int> a{2}, b{1, 1}, c{1, 1, 1};
  CHECK(p1n_dim(a) == 3);
  CHECK(p1n_dim(b) == 4);
  CHECK(p1n_dim(c) == 8);
}

TEST_CASE("ordered monomials are independent") {
  Rng rng(31);
  const auto params = random_surface_params(rng, 3);
  const long long hilbert[] = {1, 6, 21};
  for (int t = 0; t <= 2; ++t) {
    const auto r = ordered_basis_rank(params, 2, t, 5);
    CHECK(r.rank == hilbert[t]);
    CHECK(r.monomials == hilbert[t]);
  }
  const auto fm = function_model(params, 3);
  CHECK(function_model_ordered_rank(fm, 2, 5).rank == 36);
  const std::vector<int> c{1, 1, 0};
  CHECK(p1n_rank(fm, c, 5) == p1n_dim(c));
  CHECK_THROWS_AS(ordered_basis_rank(params, 2, 4), Error);
}
