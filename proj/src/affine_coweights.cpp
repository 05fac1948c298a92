#include "ellsurf/affine_coweights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b, int sign = 1) {
  RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  trim(out);
  return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RatPoly poly_shift(const RatPoly& a, int k) {
  if (a.empty() || k == 0) return a;
  RatPoly out(static_cast<std::size_t>(k), mpq_class(0));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

// a = q b + r
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  if (b.empty()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t k = a.size() - b.size();
    const mpq_class c = a.back() / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::size_t low_order(const RatPoly& p) {
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  return k;
}

std::string poly_string(const RatPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    os << p[i].get_str();
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

// Leibniz expansion: no divisions, so Laurent entries stay polynomial
RatFunc leibniz(const std::vector<RatFunc>& m, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  RatFunc det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    RatFunc term(inversions % 2 ? -1L : 1L);
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

RatFunc determinant_of(std::vector<RatFunc> m, int n) {
  if (n <= 4) return leibniz(m, n);
  RatFunc det(1L);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m[static_cast<std::size_t>(r * n + c)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return RatFunc{};
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m[static_cast<std::size_t>(piv * n + j)], m[static_cast<std::size_t>(c * n + j)]);
      det = -det;
    }
    const RatFunc pv = m[static_cast<std::size_t>(c * n + c)];
    det *= pv;
    for (int r = c + 1; r < n; ++r) {
      const RatFunc f = m[static_cast<std::size_t>(r * n + c)] / pv;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) m[static_cast<std::size_t>(r * n + j)] -= f * m[static_cast<std::size_t>(c * n + j)];
    }
  }
  return det;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

LaurentMatrix permutation_reversal(int n) {
  LaurentMatrix j;
  j.n = n;
  j.entries.assign(static_cast<std::size_t>(n * n), RatFunc{});
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = RatFunc(1L);
  return j;
}

}  // namespace

RatFunc::RatFunc(long c) : RatFunc(mpq_class(c)) {}

RatFunc::RatFunc(const mpq_class& c) {
  if (c != 0) num_ = {c};
}

RatFunc::RatFunc(int shift, RatPoly num, RatPoly den) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw Error(ErrorKind::DomainError, "zero denominator");
  normalize();
}

RatFunc RatFunc::laurent(int low, const std::vector<mpq_class>& coeffs) { return RatFunc(low, coeffs); }

RatFunc RatFunc::monomial(const mpq_class& c, int power) { return RatFunc(power, {c}); }

void RatFunc::normalize() {
  if (num_.empty()) {
    shift_ = 0;
    den_ = {mpq_class(1)};
    return;
  }
  const std::size_t kn = low_order(num_);
  const std::size_t kd = low_order(den_);
  num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(kn));
  den_.erase(den_.begin(), den_.begin() + static_cast<std::ptrdiff_t>(kd));
  shift_ += static_cast<int>(kn) - static_cast<int>(kd);
  if (den_.size() > 1) {
    const RatPoly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
  }
  const mpq_class c = den_.front();
  for (auto& x : num_) x /= c;
  for (auto& x : den_) x /= c;
}

mpq_class RatFunc::leading() const { return is_zero() ? mpq_class(0) : num_.front(); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  RatPoly a = poly_shift(poly_mul(num_, o.den_), shift_ - s);
  RatPoly b = poly_shift(poly_mul(o.num_, den_), o.shift_ - s);
  num_ = poly_add(a, b);
  den_ = poly_mul(den_, o.den_);
  shift_ = s;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc{};
  num_ = poly_mul(num_, o.num_);
  den_ = poly_mul(den_, o.den_);
  shift_ += o.shift_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorKind::DomainError, "division by the zero function");
  if (is_zero()) return *this;
  num_ = poly_mul(num_, o.den_);
  den_ = poly_mul(den_, o.num_);
  shift_ -= o.shift_;
  normalize();
  return *this;
}

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  std::string s = "z^" + std::to_string(shift_) + "*(" + poly_string(num_) + ")";
  if (den_.size() > 1) s += "/(" + poly_string(den_) + ")";
  return s;
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n * n), RatFunc{});
  for (int i = 0; i < n; ++i) m(i, i) = RatFunc(1L);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal_powers(const std::vector<int>& powers) {
  LaurentMatrix m = identity(static_cast<int>(powers.size()));
  for (int i = 0; i < m.n; ++i) m(i, i) = RatFunc::monomial(1, powers[static_cast<std::size_t>(i)]);
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n != o.n) throw Error(ErrorKind::DomainError, "matrix size mismatch");
  LaurentMatrix out;
  out.n = n;
  out.entries.assign(entries.size(), RatFunc{});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const RatFunc& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

RatFunc LaurentMatrix::determinant() const { return determinant_of(entries, n); }

LaurentMatrix LaurentMatrix::inverse() const {
  std::vector<RatFunc> m = entries;
  LaurentMatrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m[static_cast<std::size_t>(r * n + c)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Q(z)");
    for (int j = 0; j < n; ++j) {
      std::swap(m[static_cast<std::size_t>(piv * n + j)], m[static_cast<std::size_t>(c * n + j)]);
      std::swap(inv(piv, j), inv(c, j));
    }
    const RatFunc pv = m[static_cast<std::size_t>(c * n + c)];
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(c * n + j)] /= pv;
      inv(c, j) /= pv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const RatFunc f = m[static_cast<std::size_t>(r * n + c)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(r * n + j)] -= f * m[static_cast<std::size_t>(c * n + j)];
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool LaurentMatrix::invertible_at_zero() const {
  for (const auto& e : entries)
    if (e.valuation() < 0) return false;
  return determinant().valuation() == 0;
}

int Coweight::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Coweight::is_dominant() const { return std::is_sorted(parts.begin(), parts.end(), std::greater<>()); }

Coweight Coweight::inverse() const {
  Coweight out{{parts.rbegin(), parts.rend()}};
  for (auto& x : out.parts) x = -x;
  return out;
}

Coweight Coweight::dominant() const {
  Coweight out = *this;
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

Coweight Coweight::operator+(const Coweight& o) const {
  if (parts.size() != o.parts.size()) throw Error(ErrorKind::DomainError, "coweights of different rank");
  Coweight out = *this;
  for (std::size_t i = 0; i < parts.size(); ++i) out.parts[i] += o.parts[i];
  return out;
}

Coweight Coweight::operator-(const Coweight& o) const {
  Coweight neg = o;
  for (auto& x : neg.parts) x = -x;
  return *this + neg;
}

std::string Coweight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

bool weyl_equivalent(const Coweight& a, const Coweight& b) { return a.dominant() == b.dominant(); }

Coweight coweight(const LaurentMatrix& a) {
  if (a.determinant().is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Q(z)");
  const int n = a.n;
  Coweight out{std::vector<int>(static_cast<std::size_t>(n), 0)};
  int prev = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    subsets(n, k, 0, cur, sets);
    int best = INT_MAX;
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        std::vector<RatFunc> sub;
        for (int r : rows)
          for (int c : cols) sub.push_back(a(r, c));
        best = std::min(best, determinant_of(std::move(sub), k).valuation());
      }
    // best is the sum of the k smallest parts
    out.parts[static_cast<std::size_t>(n - k)] = best - prev;
    prev = best;
  }
  return out;
}

bool dominance_leq(const Coweight& a, const Coweight& b) {
  if (a.parts.size() != b.parts.size()) throw Error(ErrorKind::DomainError, "coweights of different rank");
  if (a.total() != b.total()) throw Error(ErrorKind::TotalMismatch, a.to_string() + " vs " + b.to_string());
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    sa += a.parts[i];
    sb += b.parts[i];
    if (sa > sb) return false;
  }
  return true;
}

LocalSmithForm local_smith_form(const LaurentMatrix& a) {
  const int n = a.n;
  if (a.determinant().is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Q(z)");
  LaurentMatrix m = a;
  LaurentMatrix p = LaurentMatrix::identity(n);
  LaurentMatrix q = LaurentMatrix::identity(n);
  std::vector<int> vals(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    int pr = -1, pc = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < n; ++j) {
        const RatFunc& e = m(i, j);
        if (e.is_zero()) continue;
        if (pr < 0 || e.valuation() < m(pr, pc).valuation() ||
            (e.valuation() == m(pr, pc).valuation() && e.complexity() < m(pr, pc).complexity())) {
          pr = i;
          pc = j;
        }
      }
    for (int j = 0; j < n; ++j) {
      std::swap(m(t, j), m(pr, j));
      std::swap(p(t, j), p(pr, j));
    }
    for (int i = 0; i < n; ++i) {
      std::swap(m(i, t), m(i, pc));
      std::swap(q(i, t), q(i, pc));
    }
    const RatFunc pv = m(t, t);
    // quotients below have nonnegative valuation: local-ring operations
    for (int i = t + 1; i < n; ++i) {
      const RatFunc f = m(i, t) / pv;
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(t, j);
        p(i, j) -= f * p(t, j);
      }
    }
    for (int j = t + 1; j < n; ++j) {
      const RatFunc f = m(t, j) / pv;
      if (f.is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        m(i, j) -= f * m(i, t);
        q(i, j) -= f * q(i, t);
      }
    }
    vals[static_cast<std::size_t>(t)] = pv.valuation();
  }
  // p a q = diag(u_t z^{v_t}) with v nondecreasing
  LaurentMatrix units = LaurentMatrix::identity(n);
  for (int t = 0; t < n; ++t) units(t, t) = m(t, t) * RatFunc::monomial(1, -vals[static_cast<std::size_t>(t)]);
  const LaurentMatrix rev = permutation_reversal(n);
  LocalSmithForm out;
  out.left = p.inverse() * rev;
  out.right = rev * units * q.inverse();
  out.lambda.parts.assign(vals.rbegin(), vals.rend());
  return out;
}

std::vector<LaurentMatrix> factor_by_coweight(const LaurentMatrix& a, const std::vector<Coweight>& mu) {
  if (mu.empty()) throw Error(ErrorKind::DecompositionMismatch, "empty decomposition");
  const LocalSmithForm snf = local_smith_form(a);
  Coweight sum{std::vector<int>(static_cast<std::size_t>(a.n), 0)};
  for (const auto& m : mu) {
    if (static_cast<int>(m.parts.size()) != a.n || !m.is_dominant())
      throw Error(ErrorKind::DecompositionMismatch, "not a dominant coweight: " + m.to_string());
    sum = sum + m;
  }
  if (!(sum == snf.lambda))
    throw Error(ErrorKind::DecompositionMismatch, sum.to_string() + " != " + snf.lambda.to_string());
  std::vector<LaurentMatrix> out;
  for (const auto& m : mu) out.push_back(LaurentMatrix::diagonal_powers(m.parts));
  out.front() = snf.left * out.front();
  out.back() = out.back() * snf.right;
  return out;
}

LaurentMatrix random_laurent_matrix(int n, int low, int high, Rng& rng, int bound) {
  for (;;) {
    LaurentMatrix m;
    m.n = n;
    for (int i = 0; i < n * n; ++i) {
      std::vector<mpq_class> c;
      for (int k = low; k <= high; ++k) c.emplace_back(rng.uniform_int(-bound, bound));
      m.entries.push_back(RatFunc::laurent(low, c));
    }
    if (!m.determinant().is_zero()) return m;
  }
}

LaurentMatrix random_unit_matrix(int n, int degree, Rng& rng, int bound) {
  for (;;) {
    LaurentMatrix m = random_laurent_matrix(n, 0, degree, rng, bound);
    if (m.determinant().valuation() == 0) return m;
  }
}

LaurentMatrix random_coweight_matrix(int n, int range, Rng& rng, Coweight* lambda) {
  Coweight l{std::vector<int>(static_cast<std::size_t>(n))};
  for (auto& x : l.parts) x = rng.uniform_int(-range, range);
  l = l.dominant();
  if (lambda) *lambda = l;
  return random_unit_matrix(n, 1, rng) * LaurentMatrix::diagonal_powers(l.parts) * random_unit_matrix(n, 1, rng);
}

}  // namespace ellsurf
