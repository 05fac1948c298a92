#pragma once

#include <span>
#include <vector>

#include "ellsurf/special_functions.hpp"

namespace ellsurf {

// theta_{p^nome}(a * z^power)^exp
struct ThetaAtom {
  cplx a;
  int power = 1;
  int exp = 1;
  int nome = 1;
};

// theta_p(a * z^power; q)_k^exp
struct PochAtom {
  cplx a;
  int power = 1;
  int k = 1;
  int exp = 1;
};

// scale * z^zpow * product of atoms
struct ThetaExpr {
  cplx scale{1.0, 0.0};
  int zpow = 0;
  std::vector<ThetaAtom> atoms;
  std::vector<PochAtom> poch;

  static ThetaExpr constant(cplx c) { return ThetaExpr{c, 0, {}, {}}; }
  static ThetaExpr monomial(cplx c, int power) { return ThetaExpr{c, power, {}, {}}; }
  // product of theta_p(a_i z^power)
  static ThetaExpr thetas(std::initializer_list<cplx> args, int power = 1);

  cplx eval(cplx z, cplx p, cplx q, double eps = kDefaultTruncationEps) const;
  void eval_batch(std::span<const cplx> z, std::span<cplx> out, cplx p, cplx q,
                  double eps = kDefaultTruncationEps) const;

  // z -> c z
  ThetaExpr shifted(cplx c) const;
  // z -> c / z
  ThetaExpr reflected(cplx c) const;
  // z -> z^r with the nome raised accordingly left to the caller
  ThetaExpr power_substituted(int r) const;
  ThetaExpr inverse() const;

  ThetaExpr& operator*=(const ThetaExpr& other);
  friend ThetaExpr operator*(ThetaExpr lhs, const ThetaExpr& rhs) { return lhs *= rhs; }
};

// Finite sum of ThetaExpr terms; the coefficient type of closed-form operators.
struct ThetaSum {
  std::vector<ThetaExpr> terms;

  ThetaSum() = default;
  ThetaSum(ThetaExpr e) { terms.push_back(std::move(e)); }  // NOLINT(google-explicit-constructor)

  static ThetaSum zero() { return ThetaSum{}; }
  bool is_zero() const { return terms.empty(); }

  cplx eval(cplx z, cplx p, cplx q, double eps = kDefaultTruncationEps) const;
  void eval_batch(std::span<const cplx> z, std::span<cplx> out, cplx p, cplx q,
                  double eps = kDefaultTruncationEps) const;

  ThetaSum shifted(cplx c) const;
  ThetaSum reflected(cplx c) const;
  ThetaSum power_substituted(int r) const;
  ThetaSum scaled(cplx c) const;

  ThetaSum& operator+=(const ThetaSum& other);
  friend ThetaSum operator+(ThetaSum lhs, const ThetaSum& rhs) { return lhs += rhs; }
  friend ThetaSum operator*(const ThetaSum& lhs, const ThetaSum& rhs);
};

}  // namespace ellsurf
