#include "doctest.h"
#include "ellsurf/affine_coweights.hpp"
#include "ellsurf/errors.hpp"

using namespace ellsurf;

TEST_CASE("rational function arithmetic") {
  const RatFunc z = RatFunc::monomial(1, 1);
  const RatFunc one = 1L;
  const RatFunc f = (one + z) / (one - z);
  CHECK(f.valuation() == 0);
  CHECK(f * (one - z) == one + z);
  CHECK((z * z / z) == z);
  CHECK(RatFunc().is_zero());
  CHECK(RatFunc::laurent(-2, {0, 3}).valuation() == -1);
  CHECK(RatFunc::laurent(-2, {0, 3}).leading() == 3);
}

TEST_CASE("coweights of simple matrices") {
  CHECK(coweight(LaurentMatrix::identity(3)) == Coweight{{0, 0, 0}});
  CHECK(coweight(LaurentMatrix::diagonal_powers({1, 2})) == Coweight{{2, 1}});
  LaurentMatrix u = LaurentMatrix::identity(2);
  u(0, 1) = RatFunc::monomial(1, -1);
  CHECK(coweight(u) == Coweight{{1, -1}});
  LaurentMatrix singular = LaurentMatrix::identity(2);
  singular(1, 1) = RatFunc();
  CHECK_THROWS_AS(coweight(singular), Error);
  CHECK_THROWS_AS(singular.inverse(), Error);
}

TEST_CASE("coweight helpers") {
  const Coweight a{{2, -1, 0}};
  CHECK(a.total() == 1);
  CHECK_FALSE(a.is_dominant());
  CHECK(a.dominant() == Coweight{{2, 0, -1}});
  CHECK(a.inverse() == Coweight{{0, 1, -2}});
  CHECK(weyl_equivalent(a, Coweight{{0, 2, -1}}));
  CHECK(dominance_leq(Coweight{{1, 1}}, Coweight{{2, 0}}));
  CHECK_FALSE(dominance_leq(Coweight{{2, 0}}, Coweight{{1, 1}}));
  CHECK_THROWS_AS(dominance_leq(Coweight{{1, 0}}, Coweight{{1, 1}}), Error);
  CHECK(a.to_string() == "(2,-1,0)");
}

TEST_CASE("random products obey the triangle inequality") {
  Rng rng(41);
  for (int it = 0; it < 10; ++it) {
    Coweight la, lb;
    const auto a = random_coweight_matrix(2, 2, rng, &la);
    const auto b = random_coweight_matrix(2, 2, rng, &lb);
    CHECK(coweight(a) == la);
    CHECK(dominance_leq(coweight(a * b), la + lb));
    CHECK(coweight(a.inverse()) == la.inverse());
  }
}

TEST_CASE("local Smith form") {
  Rng rng(42);
  Coweight l;
  const auto a = random_coweight_matrix(3, 2, rng, &l);
  const auto s = local_smith_form(a);
  CHECK(s.lambda == l);
  CHECK(s.left.invertible_at_zero());
  CHECK(s.right.invertible_at_zero());
  std::vector<int> parts(l.parts.begin(), l.parts.end());
  CHECK(s.left * LaurentMatrix::diagonal_powers(parts) * s.right == a);
}

TEST_CASE("factorization by coweights") {
  const auto d = LaurentMatrix::diagonal_powers({2, 1});
  const auto f = factor_by_coweight(d, {Coweight{{1, 1}}, Coweight{{1, 0}}});
  REQUIRE(f.size() == 2);
  CHECK(f[0] * f[1] == d);
  CHECK(coweight(f[0]) == Coweight{{1, 1}});
  try {
    factor_by_coweight(d, {Coweight{{1, 1}}});
    FAIL("expected DecompositionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DecompositionMismatch);
  }
}
