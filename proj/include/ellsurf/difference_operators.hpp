#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ellsurf/divisor.hpp"
#include "ellsurf/theta_expr.hpp"

namespace ellsurf {

// sum_k c_k(z) T^k with T f(z) = f(q z).
struct DiffOp {
  cplx p{0.2, 0.0};
  cplx q{0.5, 0.0};
  std::vector<ThetaSum> coeffs;
  std::vector<std::string> word;
  std::optional<std::pair<DivisorClass, DivisorClass>> degree_tag;

  static DiffOp multiplication(cplx p, cplx q, ThetaSum c);
  static DiffOp shift(cplx p, cplx q, int k = 1);
  static DiffOp identity(cplx p, cplx q) { return multiplication(p, q, ThetaExpr::constant(1.0)); }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const ThetaSum& coeff(int k) const;
  cplx coeff_at(int k, cplx z) const;

  DiffOp scaled(cplx c) const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
};

using ScalarFn = std::function<cplx(cplx)>;

// Coefficient of T^l is sum_k c_k(z) c'_{l-k}(q^k z).
DiffOp compose(const DiffOp& lhs, const DiffOp& rhs);

cplx apply(const DiffOp& op, const ScalarFn& f, cplx z);

// z / theta_p(z^2/eta) * (b(z) - b(eta/z) T)
DiffOp op_D(cplx p, cplx q, cplx eta, const ThetaSum& b);

// Order-l operator annihilating BC1(q eta)-symmetric theta functions of degree l-1.
DiffOp lowering_Dl(cplx p, cplx q, int l, cplx eta);

// Contravariant involution: an operator over the inverse shift 1/q.
DiffOp adjoint(const DiffOp& op, cplx eta, int d1, int d2);

// Coefficient k multiplied by theta_p(q^{r2} z/x; q)_{r1 + k - r2}.
DiffOp gamma_gauge(const DiffOp& op, cplx x, int r1, int r2);

// Largest |coefficient| over the points, used as a residual scale.
double coefficient_scale(const DiffOp& op, std::span<const cplx> points);

}  // namespace ellsurf
