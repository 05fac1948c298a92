#include "ellsurf/presentations.hpp"

#include <map>
#include <numeric>

#include "ellsurf/divisor.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/sampled_ops.hpp"
#include "ellsurf/surface_algebras.hpp"
#include "ellsurf/theta_spaces.hpp"

namespace ellsurf {

namespace {

void check_same(const PnDivisor& a, const PnDivisor& b) {
  if (a.n != b.n || a.r.size() != b.r.size()) throw Error(ErrorKind::DomainError, "classes on different P^n");
}

// compositions of total into parts bounded above by caps
long long bounded_compositions(std::span<const int> caps, int total) {
  if (total < 0) return 0;
  std::vector<long long> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  for (int cap : caps) {
    if (cap < 0) return 0;
    std::vector<long long> next(ways.size(), 0);
    for (int s = 0; s <= total; ++s)
      for (int b = 0; b <= cap && b <= s; ++b) next[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - b)];
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(total)];
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(parts, total - k, cur, out);
    cur.pop_back();
  }
}

// generator sequence in written order from an exponent vector
std::vector<int> expand(const std::vector<int>& exps) {
  std::vector<int> seq;
  for (std::size_t g = 0; g < exps.size(); ++g)
    for (int k = 0; k < exps[g]; ++k) seq.push_back(static_cast<int>(g));
  return seq;
}

PnDivisor total_degree(int n, const std::vector<int>& seq) {
  PnDivisor v = PnDivisor::h(n).scaled(0);
  for (int g : seq) v = v + generator_degree(n, g);
  return v;
}

using Strata = std::map<std::pair<int, std::vector<int>>, std::vector<std::vector<int>>>;

Strata group_by_degree(int n, const std::vector<std::vector<int>>& sequences) {
  Strata out;
  for (const auto& seq : sequences) {
    const PnDivisor v = total_degree(n, seq);
    out[{v.d, v.r}].push_back(seq);
  }
  return out;
}

// The back of the sequence acts first, starting from the object 0.
MatrixXc function_rows(const FunctionModel& model, const std::vector<std::vector<int>>& sequences,
                       std::span<const cplx> pts, Rng& rng) {
  const int n = model.n();
  NumericParams np;
  np.p = model.p;
  np.q = model.q;
  std::map<std::pair<std::vector<int>, int>, ThetaExpr> cache;
  MatrixXc rows = MatrixXc::Ones(static_cast<Eigen::Index>(sequences.size()), static_cast<Eigen::Index>(pts.size()));
  std::vector<cplx> vals(pts.size());
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    PnDivisor cur = PnDivisor::h(n).scaled(0);
    for (auto it = sequences[s].rbegin(); it != sequences[s].rend(); ++it) {
      const PnDivisor next = cur + generator_degree(n, *it);
      std::vector<int> key = cur.r;
      key.push_back(cur.d);
      auto c = cache.find({key, *it});
      if (c == cache.end()) {
        const cplx a = model.multiplier(next) / model.multiplier(cur);
        c = cache.emplace(std::make_pair(key, *it), multiplier_space(np, a, 1, rng).basis.front()).first;
      }
      c->second.eval_batch(pts, vals, model.p, model.q);
      for (std::size_t j = 0; j < pts.size(); ++j) rows(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) *= vals[j];
      cur = next;
    }
  }
  return rows;
}

int function_rank(const FunctionModel& model, const std::vector<std::vector<int>>& sequences, Rng& rng) {
  if (sequences.empty()) return 0;
  const int k = total_degree(model.n(), sequences.front()).kappa();
  // sections of a degree k bundle: rank at most k
  const auto pts = sample_points(rng, model.p, 2 * k + 8);
  return numerical_rank(function_rows(model, sequences, pts, rng)).rank;
}

// e_1, e_2, e_3, f_1, f_2, f_3 of P^2 as s, e_1, e_2, s+f-e_1-e_2, f-e_2, f-e_1
DivisorClass surface_step(int gen) {
  const auto b = BlowdownBasis::Odd;
  const DivisorClass s = DivisorClass::s(b, 2);
  const DivisorClass f = DivisorClass::f(b, 2);
  const DivisorClass e1 = DivisorClass::e(b, 2, 1);
  const DivisorClass e2 = DivisorClass::e(b, 2, 2);
  switch (gen) {
    case 0: return s;
    case 1: return e1;
    case 2: return e2;
    case 3: return s + f - e1 - e2;
    case 4: return f - e2;
    case 5: return f - e1;
  }
  throw Error(ErrorKind::DomainError, "generator index out of range");
}

int surface_rank(const NumericParams& params, const std::vector<std::vector<int>>& sequences, Rng& rng) {
  if (sequences.empty()) return 0;
  std::vector<OpWord> words;
  int order = 0;
  for (const auto& seq : sequences) {
    DivisorClass cur = DivisorClass::zero(BlowdownBasis::Odd, 2);
    std::vector<DiffOp> applied;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      const DivisorClass step = surface_step(*it);
      applied.push_back(generator_space(SurfaceKind::Blowup, params, cur, step, rng).front());
      cur += step;
    }
    order = cur.s_coeff();
    words.push_back(OpWord{{applied.rbegin(), applied.rend()}});
  }
  return span_rank(words, order, params.p, rng);
}

}  // namespace

PnDivisor PnDivisor::h(int n) { return PnDivisor{n, 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)}; }

PnDivisor PnDivisor::e(int n, int i) {
  if (i < 1 || i > n + 1) throw Error(ErrorKind::DomainError, "exceptional index out of range");
  PnDivisor v{n, 0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  v.r[static_cast<std::size_t>(i - 1)] = -1;
  return v;
}

PnDivisor PnDivisor::f(int n, int i) {
  PnDivisor v = h(n);
  for (int j = 1; j <= n + 1; ++j)
    if (j != i) v = v - e(n, j);
  return v;
}

int PnDivisor::kappa() const { return (n + 1) * d - std::accumulate(r.begin(), r.end(), 0); }

int PnDivisor::self_intersection() const { return pairing(*this, *this); }

PnDivisor PnDivisor::operator+(const PnDivisor& o) const {
  check_same(*this, o);
  PnDivisor v = *this;
  v.d += o.d;
  for (std::size_t i = 0; i < r.size(); ++i) v.r[i] += o.r[i];
  return v;
}

PnDivisor PnDivisor::operator-(const PnDivisor& o) const { return *this + o.scaled(-1); }

PnDivisor PnDivisor::scaled(int k) const {
  PnDivisor v = *this;
  v.d *= k;
  for (auto& x : v.r) x *= k;
  return v;
}

int pairing(const PnDivisor& a, const PnDivisor& b) {
  check_same(a, b);
  int out = (a.n - 1) * a.d * b.d;
  for (std::size_t i = 0; i < a.r.size(); ++i) out -= a.r[i] * b.r[i];
  return out;
}

long long monomial_count(const PnDivisor& v) {
  if (static_cast<int>(v.r.size()) != v.n + 1) throw Error(ErrorKind::DomainError, "need n+1 exceptional coefficients");
  // f-exponents b sum to d; the e_i exponent is d - b_i - r_i >= 0
  std::vector<int> caps;
  for (int ri : v.r) caps.push_back(v.d - ri);
  return bounded_compositions(caps, v.d);
}

long long p1n_dim(std::span<const int> c) {
  long long out = 1;
  for (int x : c) {
    if (x < 0) return 0;
    out *= x + 1;
  }
  return out;
}

PnDivisor generator_degree(int n, int gen) {
  if (gen < 0 || gen > 2 * n + 1) throw Error(ErrorKind::DomainError, "generator index out of range");
  return gen <= n ? PnDivisor::e(n, gen + 1) : PnDivisor::f(n, gen - n);
}

std::vector<std::vector<int>> ordered_exponents(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(2 * n + 2, t, cur, out);
  return out;
}

cplx FunctionModel::multiplier(const PnDivisor& v) const {
  if (v.n != n()) throw Error(ErrorKind::DomainError, "class on a different P^n");
  const int k = v.kappa();
  const int qexp = (-v.self_intersection() - k) / 2;
  cplx prod = std::pow(q, qexp) * std::pow(big_h, v.d);
  for (std::size_t i = 0; i < x.size(); ++i) prod *= std::pow(x[i], -v.r[i]);
  return (k % 2 == 0 ? 1.0 : -1.0) * prod;
}

FunctionModel function_model(const NumericParams& params, int n) {
  if (n < 1 || static_cast<int>(params.x.size()) < n + 1)
    throw Error(ErrorKind::DomainError, "function model needs n+1 points");
  FunctionModel m{params.p, params.q, params.eta * params.x[0], {}};
  m.x.assign(params.x.begin(), params.x.begin() + n + 1);
  return m;
}

OrderedRank function_model_ordered_rank(const FunctionModel& model, int kappa_deg, std::uint64_t seed) {
  if (kappa_deg < 0 || kappa_deg > 3) throw Error(ErrorKind::DomainError, "kappa-degree must be at most 3");
  const int n = model.n();
  std::vector<std::vector<int>> seqs;
  for (const auto& e : ordered_exponents(n, kappa_deg)) seqs.push_back(expand(e));
  Rng rng(seed);
  OrderedRank out;
  for (const auto& [deg, group] : group_by_degree(n, seqs)) {
    out.rank += function_rank(model, group, rng);
    out.monomials += monomial_count(PnDivisor{n, deg.first, deg.second});
    ++out.strata;
  }
  return out;
}

OrderedRank ordered_basis_rank(const NumericParams& params, int n, int kappa_deg, std::uint64_t seed) {
  if (n != 2) return function_model_ordered_rank(function_model(params, n), kappa_deg, seed);
  if (kappa_deg < 0 || kappa_deg > 3) throw Error(ErrorKind::DomainError, "kappa-degree must be at most 3");
  std::vector<std::vector<int>> seqs;
  for (const auto& e : ordered_exponents(2, kappa_deg)) seqs.push_back(expand(e));
  Rng rng(seed);
  OrderedRank out;
  for (const auto& [deg, group] : group_by_degree(2, seqs)) {
    out.rank += kappa_deg == 0 ? 1 : surface_rank(params, group, rng);
    out.monomials += monomial_count(PnDivisor{2, deg.first, deg.second});
    ++out.strata;
  }
  return out;
}

int p1n_rank(const FunctionModel& model, std::span<const int> c, std::uint64_t seed) {
  const int n = model.n();
  if (static_cast<int>(c.size()) != n) throw Error(ErrorKind::DomainError, "need one multidegree per factor");
  PnDivisor target = PnDivisor::h(n).scaled(0);
  for (int i = 0; i < n; ++i)
    target = target + (PnDivisor::e(n, i + 1) + PnDivisor::f(n, n + 1)).scaled(c[static_cast<std::size_t>(i)]);
  const int k = target.kappa();
  if (k == 0) return 1;
  // all generator sequences landing on the target
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  auto rec = [&](auto&& self, const PnDivisor& at) -> void {
    if (static_cast<int>(cur.size()) == k) {
      if (at == target) seqs.push_back(cur);
      return;
    }
    for (int g = 0; g <= 2 * n + 1; ++g) {
      const PnDivisor next = at + generator_degree(n, g);
      if (next.d > target.d) continue;
      cur.push_back(g);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, PnDivisor::h(n).scaled(0));
  Rng rng(seed);
  return function_rank(model, seqs, rng);
}

}  // namespace ellsurf
