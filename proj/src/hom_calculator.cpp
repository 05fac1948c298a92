#include "ellsurf/hom_calculator.hpp"

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

constexpr int kStepBound = 10000;

IntVec add_scaled(IntVec a, const IntVec& b, std::int64_t k) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

IntMat with_p(const IntMat& relations, std::size_t n, std::size_t p_index) {
  IntMat rel = relations;
  IntVec ep(n, 0);
  ep[p_index] = 1;
  rel.push_back(ep);
  return rel;
}

DivisorClass reflect(const DivisorClass& x, const DivisorClass& root) {
  return x + intersection(x, root) * root;
}

DivisorClass basis_class(BlowdownBasis basis, int m, std::size_t i) {
  auto d = DivisorClass::zero(basis, m);
  d[i] = 1;
  return d;
}

// Some class pairing to 1 with the root.
DivisorClass unit_partner(const DivisorClass& root) {
  for (std::size_t i = 0; i < root.coeffs().size(); ++i) {
    const auto b = basis_class(root.basis(), root.m(), i);
    const int v = intersection(root, b);
    if (v == 1) return b;
    if (v == -1) return -b;
  }
  throw Error(ErrorKind::DomainError, "root without a unimodular partner");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) ++q;
  return q;
}

// class whose negative intersection lets it be split off, or none
std::optional<DivisorClass> last_exceptional(BlowdownBasis basis, int m) {
  if (m >= 1) return DivisorClass::e(basis, m, m);
  if (basis == BlowdownBasis::Odd) return DivisorClass::s(basis, 0);
  return std::nullopt;
}

// With one blowup f - e1 is a -1 class outside the orbit of e1.
std::optional<DivisorClass> fiber_exceptional(BlowdownBasis basis, int m) {
  if (basis == BlowdownBasis::Odd && m == 1) return DivisorClass::f(basis, 1) - DivisorClass::e(basis, 1, 1);
  return std::nullopt;
}

const DivisorClass* negative_root(const std::vector<DivisorClass>& roots, const DivisorClass& d) {
  // D_m part first; s - e1 (or s - f) lowers D.f and goes last
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (intersection(d, roots[i]) < 0) return &roots[i];
  if (!roots.empty() && intersection(d, roots[0]) < 0) return &roots[0];
  return nullptr;
}

long long saturated_from_zero(ExactParamMap rho, DivisorClass d, std::vector<std::string>& trace, int depth) {
  if (depth > 64) throw Error(ErrorKind::NonTermination, "anticanonical recursion too deep");
  if (d.basis() == BlowdownBasis::Even && d.m() >= 1) {
    d = even_to_odd(d);
    rho = rho.to_odd();
    trace.push_back("odd basis: " + d.to_string());
  }
  for (int step = 0; step < kStepBound; ++step) {
    const int m = d.m();
    const auto f = DivisorClass::f(d.basis(), m);
    if (intersection(d, f) < 0) {
      trace.push_back("negative order: " + d.to_string());
      return 0;
    }
    if (auto e = last_exceptional(d.basis(), m)) {
      const int k = intersection(d, *e);
      if (k < 0) {
        d = d + k * *e;
        trace.push_back("strip " + e->to_string() + ": " + d.to_string());
        continue;
      }
    }
    if (auto e = fiber_exceptional(d.basis(), m)) {
      const int k = intersection(d, *e);
      if (k < 0) {
        d = d + k * *e;
        trace.push_back("strip " + e->to_string() + ": " + d.to_string());
        continue;
      }
    }
    if (m >= 1 && d.e_coeff(m) == 0) {
      d = d.with_m(m - 1);
      rho = rho.blown_down();
      trace.push_back("blow down to m=" + std::to_string(m - 1));
      continue;
    }
    const auto c = DivisorClass::anticanonical(d.basis(), m);
    if (intersection(d, c) < 0) {
      d -= c;
      trace.push_back("subtract C: " + d.to_string());
      continue;
    }
    const auto roots = simple_roots(d.basis(), m);
    if (const DivisorClass* root = negative_root(roots, d)) {
      const DivisorClass& alpha = *root;
      const auto l = rho.q_power(alpha);
      if (!l) {
        rho = rho.reflected(alpha);
        d = reflect(d, alpha);
        trace.push_back("reflect " + alpha.to_string() + ": " + d.to_string());
        continue;
      }
      // move to a frame where rho(alpha) = 1
      const DivisorClass unit = unit_partner(alpha);
      const DivisorClass shift = static_cast<int>(*l) * unit;
      const ExactParamMap frame = rho.translated(-shift);
      DivisorClass d1 = shift;
      DivisorClass d2 = d + shift;
      const std::int64_t a = intersection(d1, alpha);
      const std::int64_t b = intersection(d2, alpha);
      const std::int64_t r = rho.q_order();
      std::string rule;
      auto between = [&](std::int64_t& sh) {
        if (r == 0) {
          sh = 0;
          return a >= 0 && b <= 0;
        }
        const std::int64_t k = ceil_div(b, r);
        if (k * r > a) return false;
        sh = k * r;
        if (b - sh == 0 && sh + r <= a) sh += r;
        return true;
      };
      std::int64_t sh = 0;
      if (between(sh)) {
        if (b - sh < 0) {
          d2 = d2 + static_cast<int>(b - sh) * alpha;
          rule = "rule 1 on target";
        } else {
          d1 = d1 + static_cast<int>(a - sh) * alpha;
          rule = "rule 1 on source";
        }
      } else {
        d1 = reflect(d1, alpha);
        d2 = reflect(d2, alpha);
        rule = "rule 2";
      }
      rho = frame.translated(d1);
      d = d2 - d1;
      trace.push_back("resonant " + alpha.to_string() + " (q^" + std::to_string(*l) + "), " + rule + ": " +
                      d.to_string());
      continue;
    }
    // fundamental chamber
    const int dc = intersection(d, c);
    if (dc > 0) {
      const int chi = euler_characteristic(d);
      trace.push_back("chamber: chi(" + d.to_string() + ") = " + std::to_string(chi));
      return chi;
    }
    if (d.is_zero()) {
      trace.push_back("zero class");
      return 1;
    }
    if (m != 8) {
      throw Error(ErrorKind::UnsupportedResonance,
                  "nonzero nef class orthogonal to C with m=" + std::to_string(m) + ": " + d.to_string());
    }
    const bool trivial = rho.order(d) == 1;
    trace.push_back(std::string("anticanonical step, leading sheaf ") + (trivial ? "trivial" : "nontrivial"));
    return saturated_from_zero(rho, d - c, trace, depth + 1) + (trivial ? 1 : 0);
  }
  throw Error(ErrorKind::NonTermination, "reduction exceeded the step bound");
}

}  // namespace

ExactParamMap::ExactParamMap(BlowdownBasis basis, std::size_t ambient_rank, std::size_t p_index, std::size_t q_index,
                             std::vector<IntVec> images, IntMat relations)
    : basis_(basis),
      n_(ambient_rank),
      p_index_(p_index),
      q_index_(q_index),
      images_(std::move(images)),
      relations_(std::move(relations)),
      group_(ambient_rank, with_p(relations_, ambient_rank, p_index)),
      q_order_(0) {
  if (p_index >= n_ || q_index >= n_ || p_index == q_index)
    throw Error(ErrorKind::DomainError, "bad p/q coordinates");
  if (images_.size() < 2) throw Error(ErrorKind::DomainError, "need images of s and f");
  for (const auto& v : images_)
    if (v.size() != n_) throw Error(ErrorKind::DomainError, "image of the wrong length");
  for (const auto& v : relations_)
    if (v.size() != n_) throw Error(ErrorKind::DomainError, "relation of the wrong length");
  q_order_ = group_.order(unit(q_index_));
}

ExactParamMap ExactParamMap::generic(BlowdownBasis basis, int m) {
  const auto n = static_cast<std::size_t>(m) + 4;
  std::vector<IntVec> images;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m) + 2; ++i) {
    IntVec v(n, 0);
    v[2 + i] = 1;
    images.push_back(v);
  }
  return ExactParamMap(basis, n, 0, 1, std::move(images));
}

IntVec ExactParamMap::unit(std::size_t i) const {
  IntVec v(n_, 0);
  v[i] = 1;
  return v;
}

IntVec ExactParamMap::operator()(const DivisorClass& d) const {
  if (d.m() != m() || d.basis() != basis_) throw Error(ErrorKind::DomainError, "class outside the lattice of rho");
  IntVec v(n_, 0);
  for (std::size_t i = 0; i < images_.size(); ++i) v = add_scaled(std::move(v), images_[i], d[i]);
  return v;
}

std::optional<std::int64_t> ExactParamMap::q_power(const DivisorClass& d) const {
  return group_.multiple_of((*this)(d), unit(q_index_));
}

std::int64_t ExactParamMap::order(const DivisorClass& d) const { return group_.order((*this)(d)); }

ExactParamMap ExactParamMap::translated(const DivisorClass& shift) const {
  auto images = images_;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int k = intersection(basis_class(basis_, m(), i), shift);
    images[i][q_index_] += k;
  }
  return ExactParamMap(basis_, n_, p_index_, q_index_, std::move(images), relations_);
}

ExactParamMap ExactParamMap::reflected(const DivisorClass& root) const {
  const IntVec r = (*this)(root);
  auto images = images_;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int k = intersection(basis_class(basis_, m(), i), root);
    images[i] = add_scaled(std::move(images[i]), r, k);
  }
  return ExactParamMap(basis_, n_, p_index_, q_index_, std::move(images), relations_);
}

ExactParamMap ExactParamMap::blown_down() const {
  if (m() == 0) throw Error(ErrorKind::DomainError, "nothing to blow down");
  auto images = images_;
  images.pop_back();
  return ExactParamMap(basis_, n_, p_index_, q_index_, std::move(images), relations_);
}

ExactParamMap ExactParamMap::to_odd() const {
  if (basis_ == BlowdownBasis::Odd) return *this;
  if (m() < 1) throw Error(ErrorKind::DomainError, "even surface without blowups has no odd model");
  auto images = images_;
  images[0] = add_scaled(images_[0], images_[2], -1);  // s' = s - e1
  images[2] = add_scaled(images_[1], images_[2], -1);  // e1' = f - e1
  return ExactParamMap(BlowdownBasis::Odd, n_, p_index_, q_index_, std::move(images), relations_);
}

DivisorClass even_to_odd(const DivisorClass& d) {
  if (d.basis() == BlowdownBasis::Odd) return d;
  if (d.m() < 1) throw Error(ErrorKind::DomainError, "even surface without blowups has no odd model");
  auto c = d.coeffs();
  const int a = c[0], b = c[1], e1 = c[2];
  c[0] = a;
  c[1] = a + b + e1;
  c[2] = -a - e1;
  return DivisorClass(BlowdownBasis::Odd, std::move(c));
}

int euler_characteristic(const DivisorClass& d) {
  const auto c = DivisorClass::anticanonical(d.basis(), d.m());
  return 1 + intersection(d, d + c) / 2;
}

int chi_pairing(const NumericalInvariants& a, const NumericalInvariants& b) {
  const auto c = DivisorClass::anticanonical(b.c1.basis(), b.c1.m());
  return -a.rank * b.rank + a.rank * b.chi + a.chi * b.rank - intersection(a.c1, b.c1 + b.rank * c);
}

std::vector<DivisorClass> simple_roots(BlowdownBasis basis, int m) {
  std::vector<DivisorClass> roots;
  if (basis == BlowdownBasis::Even) {
    if (m >= 1) throw Error(ErrorKind::DomainError, "even basis with blowups: convert to the odd basis first");
    roots.push_back(DivisorClass::s(basis, 0) - DivisorClass::f(basis, 0));
    return roots;
  }
  if (m >= 1) roots.push_back(DivisorClass::s(basis, m) - DivisorClass::e(basis, m, 1));
  if (m >= 2)
    roots.push_back(DivisorClass::f(basis, m) - DivisorClass::e(basis, m, 1) - DivisorClass::e(basis, m, 2));
  for (int i = 1; i < m; ++i) roots.push_back(DivisorClass::e(basis, m, i) - DivisorClass::e(basis, m, i + 1));
  return roots;
}

ConeResult cone_membership(const ExactParamMap& rho_in, const DivisorClass& d_in) {
  ConeResult out;
  ExactParamMap rho = rho_in;
  DivisorClass d = d_in;
  if (d.basis() == BlowdownBasis::Even && d.m() >= 1) {
    d = even_to_odd(d);
    rho = rho.to_odd();
  }
  const auto roots = simple_roots(d.basis(), d.m());
  const auto f = DivisorClass::f(d.basis(), d.m());
  for (int step = 0; step < kStepBound; ++step) {
    if (intersection(d, f) < 0) {
      out.trace.push_back("negative f-degree: " + d.to_string());
      return out;
    }
    const DivisorClass* root = negative_root(roots, d);
    if (!root) {
      for (auto e : {last_exceptional(d.basis(), d.m()), fiber_exceptional(d.basis(), d.m())})
        if (e && intersection(d, *e) < 0) {
          out.trace.push_back("negative on " + e->to_string());
          return out;
        }
      out.nef = true;
      out.trace.push_back("universally nef: " + d.to_string());
      return out;
    }
    if (rho.in_pq(*root)) {
      out.trace.push_back("effective root " + root->to_string());
      return out;
    }
    rho = rho.reflected(*root);
    d = reflect(d, *root);
    out.trace.push_back("reflect " + root->to_string() + ": " + d.to_string());
  }
  throw Error(ErrorKind::NonTermination, "cone membership exceeded the step bound");
}

SaturatedResult saturated_dim_traced(const ExactParamMap& rho, const DivisorClass& source,
                                     const DivisorClass& target) {
  if (source.m() != rho.m() || target.m() != rho.m() || source.basis() != rho.basis() ||
      target.basis() != rho.basis())
    throw Error(ErrorKind::DomainError, "classes and rho live on different lattices");
  SaturatedResult out;
  out.dim = saturated_from_zero(rho.translated(source), target - source, out.trace, 0);
  return out;
}

long long saturated_dim(const ExactParamMap& rho, const DivisorClass& source, const DivisorClass& target) {
  return saturated_dim_traced(rho, source, target).dim;
}

K0Matrix k0_action(long long a, long long b, long long c, long long d, long long h) {
  if (a * d - b * c != 1) throw Error(ErrorKind::DomainError, "ad - bc must be 1");
  const long long parity = a * b + b * c + c * d;
  if (((h - parity) % 2 + 2) % 2 != 0) throw Error(ErrorKind::ParityViolation, "h must match ab+bc+cd mod 2");
  auto half = [](long long x) {
    if (x % 2 != 0) throw Error(ErrorKind::ParityViolation, "odd numerator");
    return x / 2;
  };
  K0Matrix m{};
  const std::array<std::array<long long, 4>, 4> cols{{
      {d, -b, half(d * h - b + c), half(-b * h - b - a + d)},
      {-c, a, half(-c * h + c + a - d), half(a * h + b - c)},
      {0, 0, d, -b},
      {0, 0, -c, a},
  }};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cols[j][i];
  return m;
}

long long k0_pairing(const std::array<long long, 4>& x, const std::array<long long, 4>& y) {
  // e8.e8 = -1, e8.C8 = 1, C8.C8 = 0
  const long long c1c1 = -x[1] * y[1] + x[1] * y[2] + x[2] * y[1];
  const long long c1C = x[1];
  return -x[0] * y[0] + x[0] * y[3] + x[3] * y[0] - c1c1 - y[0] * c1C;
}

}  // namespace ellsurf
