#include "ellsurf/theta_expr.hpp"

#include <algorithm>
#include <cmath>

#include "ellsurf/errors.hpp"
#include "ellsurf/simd/kernels.hpp"

namespace ellsurf {
namespace {

cplx ipow(cplx z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cplx r{1.0, 0.0};
  cplx b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

cplx raise(cplx v, int exp) {
  if (exp >= 0) return ipow(v, exp);
  if (std::abs(v) == 0.0) throw Error(ErrorKind::PoleHit, "inverted theta atom vanishes");
  return ipow(v, exp);
}

}  // namespace

ThetaExpr ThetaExpr::thetas(std::initializer_list<cplx> args, int power) {
  ThetaExpr e;
  for (const auto& a : args) e.atoms.push_back(ThetaAtom{a, power, 1, 1});
  return e;
}

cplx ThetaExpr::eval(cplx z, cplx p, cplx q, double eps) const {
  cplx v = scale * ipow(z, zpow);
  for (const auto& at : atoms) v *= raise(theta_p(ipow(p, at.nome), at.a * ipow(z, at.power), eps), at.exp);
  for (const auto& pa : poch)
    v *= raise(theta_pochhammer(p, q, pa.a * ipow(z, pa.power), pa.k, eps), pa.exp);
  return v;
}

void ThetaExpr::eval_batch(std::span<const cplx> z, std::span<cplx> out, cplx p, cplx q,
                           double eps) const {
  const std::size_t n = z.size();
  std::vector<cplx> args(n), vals(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * ipow(z[i], zpow);
  auto multiply_theta = [&](cplx nome, cplx a, int power, int exp) {
    for (std::size_t i = 0; i < n; ++i) args[i] = a * ipow(z[i], power);
    simd::theta_batch(nome, args, vals, eps);
    for (std::size_t i = 0; i < n; ++i) {
      if (exp < 0 && std::abs(vals[i]) < eps * 10.0)
        throw Error(ErrorKind::PoleHit, "inverted theta factor vanishes");
      out[i] *= ipow(vals[i], exp);
    }
  };
  for (const auto& at : atoms) multiply_theta(ipow(p, at.nome), at.a, at.power, at.exp);
  for (const auto& pa : poch) {
    if (pa.k >= 0) {
      cplx c = pa.a;
      for (int j = 0; j < pa.k; ++j, c *= q) multiply_theta(p, c, pa.power, pa.exp);
    } else {
      cplx c = pa.a;
      for (int j = -1; j >= pa.k; --j) {
        c /= q;
        multiply_theta(p, c, pa.power, -pa.exp);
      }
    }
  }
}

ThetaExpr ThetaExpr::shifted(cplx c) const {
  ThetaExpr r = *this;
  r.scale *= ipow(c, zpow);
  for (auto& at : r.atoms) at.a *= ipow(c, at.power);
  for (auto& pa : r.poch) pa.a *= ipow(c, pa.power);
  return r;
}

ThetaExpr ThetaExpr::reflected(cplx c) const {
  ThetaExpr r = *this;
  r.scale *= ipow(c, zpow);
  r.zpow = -zpow;
  for (auto& at : r.atoms) {
    at.a *= ipow(c, at.power);
    at.power = -at.power;
  }
  for (auto& pa : r.poch) {
    pa.a *= ipow(c, pa.power);
    pa.power = -pa.power;
  }
  return r;
}

ThetaExpr ThetaExpr::power_substituted(int r) const {
  ThetaExpr e = *this;
  e.zpow *= r;
  for (auto& at : e.atoms) at.power *= r;
  for (auto& pa : e.poch) pa.power *= r;
  return e;
}

ThetaExpr ThetaExpr::inverse() const {
  ThetaExpr r = *this;
  r.scale = 1.0 / scale;
  r.zpow = -zpow;
  for (auto& at : r.atoms) at.exp = -at.exp;
  for (auto& pa : r.poch) pa.exp = -pa.exp;
  return r;
}

ThetaExpr& ThetaExpr::operator*=(const ThetaExpr& other) {
  scale *= other.scale;
  zpow += other.zpow;
  for (const auto& at : other.atoms) {
    bool merged = false;
    for (auto& mine : atoms) {
      if (mine.a == at.a && mine.power == at.power && mine.nome == at.nome) {
        mine.exp += at.exp;
        merged = true;
        break;
      }
    }
    if (!merged) atoms.push_back(at);
  }
  std::erase_if(atoms, [](const ThetaAtom& at) { return at.exp == 0; });
  poch.insert(poch.end(), other.poch.begin(), other.poch.end());
  return *this;
}

cplx ThetaSum::eval(cplx z, cplx p, cplx q, double eps) const {
  cplx v{};
  for (const auto& t : terms) v += t.eval(z, p, q, eps);
  return v;
}

void ThetaSum::eval_batch(std::span<const cplx> z, std::span<cplx> out, cplx p, cplx q,
                          double eps) const {
  std::fill(out.begin(), out.end(), cplx{});
  std::vector<cplx> buf(z.size());
  for (const auto& t : terms) {
    t.eval_batch(z, buf, p, q, eps);
    for (std::size_t i = 0; i < z.size(); ++i) out[i] += buf[i];
  }
}

ThetaSum ThetaSum::shifted(cplx c) const {
  ThetaSum r;
  for (const auto& t : terms) r.terms.push_back(t.shifted(c));
  return r;
}

ThetaSum ThetaSum::reflected(cplx c) const {
  ThetaSum r;
  for (const auto& t : terms) r.terms.push_back(t.reflected(c));
  return r;
}

ThetaSum ThetaSum::power_substituted(int r) const {
  ThetaSum s;
  for (const auto& t : terms) s.terms.push_back(t.power_substituted(r));
  return s;
}

ThetaSum ThetaSum::scaled(cplx c) const {
  ThetaSum r = *this;
  for (auto& t : r.terms) t.scale *= c;
  return r;
}

ThetaSum& ThetaSum::operator+=(const ThetaSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

ThetaSum operator*(const ThetaSum& lhs, const ThetaSum& rhs) {
  ThetaSum r;
  r.terms.reserve(lhs.terms.size() * rhs.terms.size());
  for (const auto& a : lhs.terms)
    for (const auto& b : rhs.terms) r.terms.push_back(a * b);
  return r;
}

}  // namespace ellsurf
