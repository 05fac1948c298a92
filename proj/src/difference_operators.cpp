#include "ellsurf/difference_operators.hpp"

#include <cmath>

#include "ellsurf/errors.hpp"

namespace ellsurf {

DiffOp DiffOp::multiplication(cplx p, cplx q, ThetaSum c) {
  DiffOp op;
  op.p = p;
  op.q = q;
  op.coeffs.push_back(std::move(c));
  return op;
}

DiffOp DiffOp::shift(cplx p, cplx q, int k) {
  DiffOp op;
  op.p = p;
  op.q = q;
  op.coeffs.assign(static_cast<std::size_t>(k) + 1, ThetaSum::zero());
  op.coeffs.back() = ThetaExpr::constant(1.0);
  return op;
}

const ThetaSum& DiffOp::coeff(int k) const {
  static const ThetaSum kZero;
  if (k < 0 || k > order()) return kZero;
  return coeffs[static_cast<std::size_t>(k)];
}

cplx DiffOp::coeff_at(int k, cplx z) const { return coeff(k).eval(z, p, q); }

DiffOp DiffOp::scaled(cplx c) const {
  DiffOp r = *this;
  for (auto& ck : r.coeffs) ck = ck.scaled(c);
  return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  if (b.order() > r.order()) r.coeffs.resize(b.coeffs.size());
  for (int k = 0; k <= b.order(); ++k) r.coeffs[static_cast<std::size_t>(k)] += b.coeff(k);
  r.word.clear();
  return r;
}

DiffOp compose(const DiffOp& lhs, const DiffOp& rhs) {
  DiffOp r;
  r.p = lhs.p;
  r.q = lhs.q;
  if (lhs.coeffs.empty() || rhs.coeffs.empty()) return r;
  r.coeffs.assign(static_cast<std::size_t>(lhs.order() + rhs.order() + 1), ThetaSum::zero());
  cplx qk{1.0, 0.0};
  for (int k = 0; k <= lhs.order(); ++k, qk *= lhs.q) {
    const ThetaSum& a = lhs.coeff(k);
    if (a.is_zero()) continue;
    for (int j = 0; j <= rhs.order(); ++j) {
      const ThetaSum& b = rhs.coeff(j);
      if (b.is_zero()) continue;
      r.coeffs[static_cast<std::size_t>(k + j)] += a * b.shifted(qk);
    }
  }
  r.word = rhs.word;
  r.word.insert(r.word.end(), lhs.word.begin(), lhs.word.end());
  if (lhs.degree_tag && rhs.degree_tag) r.degree_tag = std::make_pair(rhs.degree_tag->first, lhs.degree_tag->second);
  return r;
}

cplx apply(const DiffOp& op, const ScalarFn& f, cplx z) {
  cplx acc{};
  cplx zk = z;
  for (int k = 0; k <= op.order(); ++k, zk *= op.q) {
    const ThetaSum& c = op.coeff(k);
    if (c.is_zero()) continue;
    acc += c.eval(z, op.p, op.q) * f(zk);
  }
  return acc;
}

DiffOp op_D(cplx p, cplx q, cplx eta, const ThetaSum& b) {
  ThetaExpr pre;
  pre.zpow = 1;
  pre.atoms.push_back(ThetaAtom{1.0 / eta, 2, -1, 1});
  DiffOp op;
  op.p = p;
  op.q = q;
  op.coeffs.push_back(ThetaSum(pre) * b);
  op.coeffs.push_back((ThetaSum(pre) * b.reflected(eta)).scaled(-1.0));
  return op;
}

DiffOp lowering_Dl(cplx p, cplx q, int l, cplx eta) {
  if (l < 0) throw Error(ErrorKind::DomainError, "lowering operator order must be nonnegative");
  DiffOp op;
  op.p = p;
  op.q = q;
  for (int k = 0; k <= l; ++k) {
    const cplx num = theta_pochhammer(p, q, std::pow(q, -l), k);
    cplx den{1.0, 0.0};
    for (int j = 0; j < k; ++j) {
      const cplx t = theta_p(p, std::pow(q, 1 + j));
      if (std::abs(t) < 1e-12) throw Error(ErrorKind::TorsionDegenerate, "theta_p(q^j) vanishes");
      den *= t;
    }
    ThetaExpr c;
    c.scale = std::pow(q, l * k) * num / den;
    c.zpow = l;
    c.atoms.push_back(ThetaAtom{std::pow(q, 2 * k - 1) / eta, 2, 1, 1});
    c.poch.push_back(PochAtom{std::pow(q, k - 1) / eta, 2, l + 1, -1});
    op.coeffs.emplace_back(std::move(c));
  }
  return op;
}

DiffOp adjoint(const DiffOp& op, cplx eta, int d1, int d2) {
  DiffOp r;
  r.p = op.p;
  r.q = 1.0 / op.q;
  // scalar gauge q^{(d1-d2)/2} so that the adjoint of T is T
  const cplx gauge = std::pow(std::sqrt(op.q), d1 - d2);
  for (int k = 0; k <= op.order(); ++k) {
    ThetaExpr factor;
    factor.scale = gauge * std::pow(op.q, k);
    factor.atoms.push_back(ThetaAtom{std::pow(op.q, d2 - 2 * k - 1) / eta, 2, 1, 1});
    factor.atoms.push_back(ThetaAtom{std::pow(op.q, d1 - 1) / eta, 2, -1, 1});
    const ThetaSum& c = op.coeff(k);
    r.coeffs.push_back(c.is_zero() ? ThetaSum::zero() : ThetaSum(factor) * c.shifted(std::pow(op.q, -k)));
  }
  r.word.assign(op.word.rbegin(), op.word.rend());
  return r;
}

DiffOp gamma_gauge(const DiffOp& op, cplx x, int r1, int r2) {
  DiffOp r = op;
  for (int k = 0; k <= op.order(); ++k) {
    const int len = r1 + k - r2;
    if (len == 0 || op.coeff(k).is_zero()) continue;
    ThetaExpr g;
    g.poch.push_back(PochAtom{std::pow(op.q, r2) / x, 1, len, 1});
    r.coeffs[static_cast<std::size_t>(k)] = ThetaSum(g) * op.coeff(k);
  }
  return r;
}

double coefficient_scale(const DiffOp& op, std::span<const cplx> points) {
  double s = 0.0;
  for (int k = 0; k <= op.order(); ++k)
    for (const auto& z : points) s = std::max(s, std::abs(op.coeff_at(k, z)));
  return s;
}

}  // namespace ellsurf
