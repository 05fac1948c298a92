#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

#include "ellsurf/numerics.hpp"

namespace ellsurf {

// Polynomial over Q, coefficient i of z^i, no trailing zeros.
using RatPoly = std::vector<mpq_class>;

// z^shift * num / den with num(0) != 0, den(0) = 1 and gcd(num, den) = 1;
// the zero function has an empty numerator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatFunc(int shift, RatPoly num, RatPoly den = {mpq_class(1)});

  // sum_i coeffs[i] z^{low + i}
  static RatFunc laurent(int low, const std::vector<mpq_class>& coeffs);
  static RatFunc monomial(const mpq_class& c, int power);

  bool is_zero() const { return num_.empty(); }
  // INT_MAX for zero
  int valuation() const { return is_zero() ? INT_MAX : shift_; }
  bool is_laurent_polynomial() const { return den_.size() == 1; }
  // degree of num plus degree of den; the SNF tie-break
  std::size_t complexity() const { return num_.size() + den_.size(); }
  int shift() const { return shift_; }
  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }
  // value of z^{-v} f at 0
  mpq_class leading() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  int shift_ = 0;
  RatPoly num_;
  RatPoly den_{mpq_class(1)};

  void normalize();
};

// Square matrix over Q(z); the Laurent-polynomial case is the usual input.
struct LaurentMatrix {
  int n = 0;
  std::vector<RatFunc> entries;  // row major

  static LaurentMatrix identity(int n);
  static LaurentMatrix diagonal_powers(const std::vector<int>& powers);

  RatFunc& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }
  const RatFunc& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const = default;

  RatFunc determinant() const;
  // throws SingularMatrix
  LaurentMatrix inverse() const;
  // every entry has nonnegative valuation and the determinant is a unit at 0
  bool invertible_at_zero() const;
};

struct Coweight {
  std::vector<int> parts;

  int total() const;
  bool is_dominant() const;
  // (-l_n, ..., -l_1)
  Coweight inverse() const;
  // parts sorted nonincreasing: the Weyl-orbit representative
  Coweight dominant() const;
  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  bool operator==(const Coweight& o) const = default;
  std::string to_string() const;
};

// Weyl-group equivalence
bool weyl_equivalent(const Coweight& a, const Coweight& b);

// From the minimal valuations of k x k minors; throws SingularMatrix.
Coweight coweight(const LaurentMatrix& a);

// Throws TotalMismatch when the totals differ.
bool dominance_leq(const Coweight& a, const Coweight& b);

// A = U z^lambda V with U, V invertible at 0.
struct LocalSmithForm {
  LaurentMatrix left;
  Coweight lambda;
  LaurentMatrix right;
};
LocalSmithForm local_smith_form(const LaurentMatrix& a);

// Factors A_1 ... A_m = A with coweight(A_i) = mu[i]; throws
// DecompositionMismatch unless sum mu = coweight(A) with each mu[i] dominant.
std::vector<LaurentMatrix> factor_by_coweight(const LaurentMatrix& a, const std::vector<Coweight>& mu);

// Random matrices with Laurent polynomial entries of z-degree in [low, high].
LaurentMatrix random_laurent_matrix(int n, int low, int high, Rng& rng, int bound = 3);
// Polynomial entries with an invertible constant term.
LaurentMatrix random_unit_matrix(int n, int degree, Rng& rng, int bound = 3);
// U z^lambda V with random units and lambda dominant with parts in [-range, range].
LaurentMatrix random_coweight_matrix(int n, int range, Rng& rng, Coweight* lambda = nullptr);

}  // namespace ellsurf
