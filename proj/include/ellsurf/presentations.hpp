#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ellsurf/numerics.hpp"

namespace ellsurf {

// d h - sum r_i e_i on the blowup of P^n in the n+1 coordinate points.
struct PnDivisor {
  int n = 2;
  int d = 0;
  std::vector<int> r;  // n + 1 entries

  static PnDivisor h(int n);
  static PnDivisor e(int n, int i);  // i = 1..n+1
  // f_i = h - sum_{j != i} e_j
  static PnDivisor f(int n, int i);

  int kappa() const;
  int self_intersection() const;
  PnDivisor operator+(const PnDivisor& o) const;
  PnDivisor operator-(const PnDivisor& o) const;
  PnDivisor scaled(int k) const;
  bool operator==(const PnDivisor& o) const = default;
};

int pairing(const PnDivisor& a, const PnDivisor& b);

// Monomials in e_1..e_{n+1}, f_1..f_{n+1} of the given degree.
long long monomial_count(const PnDivisor& v);

// dimension of the (P^1)^n piece of multidegree c
long long p1n_dim(std::span<const int> c);

// Generator 0..n is e_{i+1}, generator n+1+i is f_{i+1}.
PnDivisor generator_degree(int n, int gen);

// Ordered monomials e_1^{a_1} ... e_{n+1}^{a_{n+1}} f_1^{b_1} ... f_{n+1}^{b_{n+1}}
// of total kappa-degree t, as exponent vectors (a, b).
std::vector<std::vector<int>> ordered_exponents(int n, int t);

// Function model: Hom(v, w) = sections of O(D_w / D_v) on C*/p^Z with
// D_v = q^{(-v.v - kappa(v))/2} H^d prod x_i^{-r_i}.
struct FunctionModel {
  cplx p;
  cplx q;
  cplx big_h;             // degree n + 1
  std::vector<cplx> x;    // n + 1 points of degree 1

  int n() const { return static_cast<int>(x.size()) - 1; }
  // multiplier A of O(D_v): f(pz) = A z^{-kappa(v)} f(z)
  cplx multiplier(const PnDivisor& v) const;
};

// H = eta x0 and x_i = params.x[i-1]; needs n + 1 points in params.x.
FunctionModel function_model(const NumericParams& params, int n);

struct OrderedRank {
  int rank = 0;
  long long monomials = 0;  // sum of monomial_count over the degree strata
  int strata = 0;
};

// n = 2 through the blowup of the odd surface in two points; n >= 3 through
// the function model.
OrderedRank ordered_basis_rank(const NumericParams& params, int n, int kappa_deg, std::uint64_t seed = 1);

// The function model for any n >= 2.
OrderedRank function_model_ordered_rank(const FunctionModel& model, int kappa_deg, std::uint64_t seed = 1);

// Rank of every product of generators from 0 to sum c_i g_{i,n+1} in the
// function model, g_{i,n+1} = e_i + f_{n+1}.
int p1n_rank(const FunctionModel& model, std::span<const int> c, std::uint64_t seed = 1);

}  // namespace ellsurf
