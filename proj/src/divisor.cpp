#include "ellsurf/divisor.hpp"

#include <sstream>

#include "ellsurf/errors.hpp"

namespace ellsurf {

DivisorClass::DivisorClass(BlowdownBasis basis, std::vector<int> coeffs) : basis_(basis), c_(std::move(coeffs)) {
  if (c_.size() < 2) throw Error(ErrorKind::DomainError, "divisor class needs s and f coefficients");
}

DivisorClass DivisorClass::zero(BlowdownBasis basis, int m) {
  return DivisorClass(basis, std::vector<int>(static_cast<std::size_t>(m) + 2, 0));
}

DivisorClass DivisorClass::s(BlowdownBasis basis, int m) {
  auto d = zero(basis, m);
  d.c_[0] = 1;
  return d;
}

DivisorClass DivisorClass::f(BlowdownBasis basis, int m) {
  auto d = zero(basis, m);
  d.c_[1] = 1;
  return d;
}

DivisorClass DivisorClass::e(BlowdownBasis basis, int m, int i) {
  auto d = zero(basis, m);
  d.c_.at(static_cast<std::size_t>(1 + i)) = 1;
  return d;
}

DivisorClass DivisorClass::anticanonical(BlowdownBasis basis, int m) {
  auto d = zero(basis, m);
  d.c_[0] = 2;
  d.c_[1] = basis == BlowdownBasis::Odd ? 3 : 2;
  for (int i = 1; i <= m; ++i) d.c_[static_cast<std::size_t>(1 + i)] = -1;
  return d;
}

DivisorClass DivisorClass::sf(BlowdownBasis basis, int d, int dp, std::vector<int> r) {
  std::vector<int> c{d, dp};
  for (int ri : r) c.push_back(-ri);
  return DivisorClass(basis, std::move(c));
}

DivisorClass DivisorClass::without_exceptionals() const { return DivisorClass(basis_, {c_[0], c_[1]}); }

DivisorClass DivisorClass::with_m(int m) const {
  auto c = c_;
  c.resize(static_cast<std::size_t>(m) + 2, 0);
  return DivisorClass(basis_, std::move(c));
}

bool DivisorClass::is_zero() const {
  for (int v : c_)
    if (v != 0) return false;
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.c_.size() != c_.size() || o.basis_ != basis_)
    throw Error(ErrorKind::DomainError, "divisor classes live in different lattices");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.c_.size() != c_.size() || o.basis_ != basis_)
    throw Error(ErrorKind::DomainError, "divisor classes live in different lattices");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

DivisorClass operator*(int k, DivisorClass a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](int coef, const std::string& name) {
    if (coef == 0) return;
    if (!first) out << (coef > 0 ? "+" : "-");
    else if (coef < 0) out << "-";
    const int a = coef < 0 ? -coef : coef;
    if (a != 1) out << a;
    out << name;
    first = false;
  };
  term(c_[0], "s");
  term(c_[1], "f");
  for (std::size_t i = 2; i < c_.size(); ++i) term(c_[i], "e" + std::to_string(i - 1));
  if (first) out << "0";
  return out.str();
}

int intersection(const DivisorClass& a, const DivisorClass& b) {
  if (a.m() != b.m() || a.basis() != b.basis())
    throw Error(ErrorKind::DomainError, "intersection of classes from different lattices");
  int v = a[0] * b[1] + a[1] * b[0];
  if (a.basis() == BlowdownBasis::Odd) v -= a[0] * b[0];
  for (int i = 1; i <= a.m(); ++i) v -= a.e_coeff(i) * b.e_coeff(i);
  return v;
}

}  // namespace ellsurf
