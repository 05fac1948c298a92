#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/hom_calculator.hpp"

using namespace ellsurf;

namespace {

const auto kEven = BlowdownBasis::Even;
const auto kOdd = BlowdownBasis::Odd;

long long dim0(const ExactParamMap& rho, const DivisorClass& d) {
  return saturated_dim(rho, DivisorClass::zero(d.basis(), d.m()), d);
}

}  // namespace

TEST_CASE("Smith normal form") {
  const IntMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(a, 3);
  CHECK(s.diagonal == IntVec{2, 6, 12});
  const IntMat d = mat_mul(mat_mul(s.U, a), s.V);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(d[i][j] == (i == j ? s.diagonal[i] : 0));
}

TEST_CASE("quotient groups") {
  const QuotientGroup g(2, {{0, 3}});
  CHECK(g.order({0, 1}) == 3);
  CHECK(g.order({1, 0}) == 0);
  CHECK(g.is_zero({0, 6}));
  CHECK(g.multiple_of({0, 2}, {0, 1}) == 2);
  CHECK_FALSE(g.multiple_of({1, 0}, {0, 1}).has_value());
}

TEST_CASE("generic dimensions") {
  CHECK(dim0(ExactParamMap::generic(kEven, 0), DivisorClass::sf(kEven, 2, 3)) == 12);
  CHECK(dim0(ExactParamMap::generic(kOdd, 0), DivisorClass::sf(kOdd, 2, 3)) == 9);
  CHECK(dim0(ExactParamMap::generic(kOdd, 0), DivisorClass::sf(kOdd, 3, 1)) == 3);
  CHECK(dim0(ExactParamMap::generic(kEven, 1), DivisorClass::sf(kEven, 2, 3, {2})) == 9);
  CHECK(dim0(ExactParamMap::generic(kEven, 0), DivisorClass::sf(kEven, 1, -1)) == 0);
}

TEST_CASE("with one blowup f - e1 is split off") {
  const auto g = ExactParamMap::generic(kOdd, 1);
  CHECK(dim0(g, DivisorClass(kOdd, {0, 3, -2})) == 2);
  CHECK(dim0(g, DivisorClass(kOdd, {0, 2, -2})) == 1);
  CHECK(dim0(g, DivisorClass(kOdd, {1, 3, -2})) == 4);
  CHECK_FALSE(cone_membership(g, DivisorClass(kOdd, {0, 3, -2})).nef);
}

TEST_CASE("resonance raises the dimension") {
  // rho(s - f) = q
  const ExactParamMap r(kEven, 4, 0, 1, {{0, 1, 1, 0}, {0, 0, 1, 0}});
  CHECK(r.q_power(DivisorClass::sf(kEven, 1, -1)) == 1);
  CHECK(dim0(r, DivisorClass::sf(kEven, 2, 0)) == 4);
  CHECK(dim0(r, DivisorClass::sf(kEven, 1, 0)) == 2);
  CHECK(dim0(r, DivisorClass::sf(kEven, 1, 1)) == 4);
}

TEST_CASE("torsion anticanonical class") {
  const int m = 8;
  const std::size_t n = m + 5;
  std::vector<IntVec> im;
  for (int i = 0; i < m + 2; ++i) {
    IntVec v(n, 0);
    v[static_cast<std::size_t>(2 + i)] = 1;
    im.push_back(v);
  }
  IntVec e8(n, 0);
  e8[2] = 2;
  e8[3] = 3;
  for (int i = 1; i <= 7; ++i) e8[static_cast<std::size_t>(3 + i)] = -1;
  e8[n - 1] = -1;
  im[9] = e8;
  IntVec rel(n, 0);
  rel[n - 1] = 2;
  const ExactParamMap rho(kOdd, n, 0, 1, im, {rel});
  const auto c = DivisorClass::anticanonical(kOdd, 8);
  CHECK(rho.order(c) == 2);
  for (int d = 0; d <= 5; ++d) CHECK(dim0(rho, d * c) == 1 + d / 2);
  CHECK(dim0(ExactParamMap::generic(kOdd, 8), 4 * c) == 1);
}

TEST_CASE("reflected maps") {
  const auto g = ExactParamMap::generic(kOdd, 2);
  const auto root = simple_roots(kOdd, 2).at(1);
  const auto r = g.reflected(root);
  const DivisorClass x(kOdd, {1, 2, -1, 0});
  const DivisorClass sx = x + intersection(x, root) * root;
  CHECK(r(x) == g(sx));
  CHECK(simple_roots(kOdd, 3).size() == 4);
}

TEST_CASE("nef cone") {
  const auto g = ExactParamMap::generic(kEven, 0);
  CHECK(cone_membership(g, DivisorClass::sf(kEven, 0, 1)).nef);
  CHECK_FALSE(cone_membership(g, DivisorClass::sf(kEven, 1, -1)).nef);
  const auto c3 = ExactParamMap::generic(kOdd, 3);
  CHECK(cone_membership(c3, DivisorClass::anticanonical(kOdd, 3) + DivisorClass::f(kOdd, 3)).nef);
}

TEST_CASE("Euler characteristic and the chi pairing") {
  CHECK(euler_characteristic(DivisorClass::sf(kEven, 2, 3)) == 12);
  CHECK(euler_characteristic(DivisorClass::sf(kOdd, 2, 3)) == 9);
  const NumericalInvariants o{1, DivisorClass::zero(kOdd, 1), 1};
  CHECK(chi_pairing(o, o) == 1);
}

TEST_CASE("K0 action tables") {
  const auto t = k0_action(1, 1, 0, 1, -1);
  const K0Matrix expected{{{1, 0, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {0, 0, -1, 1}}};
  CHECK(t == expected);
  const auto id = k0_action(1, 0, 0, 1, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == (i == j));
  try {
    k0_action(1, 1, 0, 1, 0);
    FAIL("expected ParityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityViolation);
  }
  CHECK_THROWS_AS(k0_action(2, 0, 0, 1, 0), Error);
}
