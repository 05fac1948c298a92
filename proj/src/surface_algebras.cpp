#include "ellsurf/surface_algebras.hpp"

#include <cmath>
#include <map>

#include "ellsurf/errors.hpp"

namespace ellsurf {
namespace {

cplx qpow(cplx q, int n) { return std::pow(q, n); }

bool odd_base(SurfaceKind kind, const DivisorClass& c) {
  if (kind == SurfaceKind::Odd) return true;
  if (kind == SurfaceKind::Even) return false;
  return c.basis() == BlowdownBasis::Odd;
}

SurfaceKind base_kind(const DivisorClass& c) {
  return c.basis() == BlowdownBasis::Odd ? SurfaceKind::Odd : SurfaceKind::Even;
}

// theta_p(z/x, eta/(x z)): BC1(eta)-symmetric of degree 1 vanishing at x
ThetaExpr symmetric_pair(cplx x, cplx eta) {
  ThetaExpr e;
  e.atoms.push_back(ThetaAtom{1.0 / x, 1, 1, 1});
  e.atoms.push_back(ThetaAtom{eta / x, -1, 1, 1});
  return e;
}

ThetaSum random_combination(const std::vector<ThetaExpr>& basis, Rng& rng) {
  ThetaSum s;
  for (const auto& b : basis) {
    ThetaExpr t = b;
    t.scale *= rng.gaussian();
    s.terms.push_back(std::move(t));
  }
  return s;
}

DiffOp random_combination(const std::vector<DiffOp>& ops, Rng& rng) {
  DiffOp acc = ops.front().scaled(rng.gaussian());
  for (std::size_t i = 1; i < ops.size(); ++i) acc = acc + ops[i].scaled(rng.gaussian());
  return acc;
}

std::vector<DiffOp> multiplications(const NumericParams& params, const std::vector<ThetaExpr>& fns) {
  std::vector<DiffOp> out;
  for (const auto& f : fns) out.push_back(DiffOp::multiplication(params.p, params.q, f));
  return out;
}

std::vector<DiffOp> symmetric_ops(const NumericParams& params, cplx eta, const std::vector<ThetaExpr>& fns) {
  std::vector<DiffOp> out;
  for (const auto& f : fns) out.push_back(op_D(params.p, params.q, eta, f));
  return out;
}

// Functions of the even-algebra generators at a source with local parameters.
std::vector<ThetaExpr> even_generator_functions(const NumericParams& params, const LocalParams& lp, StepType type,
                                                Rng& rng) {
  switch (type) {
    case StepType::Fiber: return bc1_symmetric_space(params, params.q * lp.eta, 1, rng).basis;
    case StepType::Section: return bc1_symmetric_space(params, params.q * lp.eta_prime, 1, rng).basis;
    case StepType::Diagonal: {
      const cplx a = params.q * lp.eta * lp.eta_prime / (params.p * params.p);
      return multiplier_space(params, a, 4, rng).basis;
    }
  }
  return {};
}

cplx diagonal_multiplier(const NumericParams& params, const LocalParams& lp, bool odd) {
  if (odd) return -params.q * lp.eta * lp.x0 / params.p;
  return params.q * lp.eta * lp.eta_prime / (params.p * params.p);
}

std::vector<std::vector<int>> lattice_paths(int d, int dp, std::size_t budget) {
  // number of paths with steps (0,1), (1,0), (1,1), checked before enumerating
  std::vector<std::vector<double>> count(static_cast<std::size_t>(d) + 1, std::vector<double>(static_cast<std::size_t>(dp) + 1, 0.0));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= dp; ++j) {
      if (i == 0 || j == 0) {
        count[i][j] = 1.0;
        continue;
      }
      count[i][j] = count[i - 1][j] + count[i][j - 1] + count[i - 1][j - 1];
    }
  if (count[d][dp] > static_cast<double>(budget))
    throw Error(ErrorKind::PathBudgetExceeded, std::to_string(count[d][dp]) + " lattice paths");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // 0 = f, 1 = s, 2 = s+f: lexicographic in that order
  auto rec = [&](auto&& self, int a, int b) -> void {
    if (a == d && b == dp) {
      out.push_back(cur);
      return;
    }
    if (b < dp) {
      cur.push_back(0);
      self(self, a, b + 1);
      cur.pop_back();
    }
    if (a < d) {
      cur.push_back(1);
      self(self, a + 1, b);
      cur.pop_back();
    }
    if (a < d && b < dp) {
      cur.push_back(2);
      self(self, a + 1, b + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

int unblown_dimension(bool odd, int d, int dp) {
  if (d < 0 || dp < 0) return 0;
  if (!odd) return (d + 1) * (dp + 1);
  if (d <= dp) return (d + 1) * (2 * dp + 2 - d) / 2;
  return (dp + 1) * (dp + 2) / 2;
}

}  // namespace

LocalParams local_params(const NumericParams& params, const DivisorClass& source) {
  const int d = source.s_coeff();
  const int dp = source.f_coeff();
  LocalParams lp;
  lp.eta = qpow(params.q, -d) * params.eta;
  if (source.basis() == BlowdownBasis::Odd) {
    lp.eta_prime = params.eta_prime;
    lp.x0 = params.x.empty() ? cplx{1.0, 0.0} : qpow(params.q, d - dp) * params.x[0];
  } else {
    lp.eta_prime = qpow(params.q, -dp) * params.eta_prime;
    lp.x0 = params.x.empty() ? cplx{1.0, 0.0} : params.x[0];
  }
  for (int i = 1; i <= source.m(); ++i) {
    if (static_cast<int>(params.x.size()) <= i) throw Error(ErrorKind::DomainError, "missing blown-up point x" + std::to_string(i));
    lp.points.push_back(qpow(params.q, source.e_coeff(i)) * params.x[static_cast<std::size_t>(i)]);
  }
  return lp;
}

NumericParams random_surface_params(Rng& rng, int m) {
  NumericParams params;
  params.p = rng.annulus(0.05, 0.25);
  params.q = rng.annulus(0.9, 1.0);
  params.eta = rng.annulus(0.6, 1.6);
  params.eta_prime = rng.annulus(0.6, 1.6);
  params.x.clear();
  for (int i = 0; i <= m; ++i) params.x.push_back(rng.annulus(0.6, 1.6));
  return params;
}

std::vector<DiffOp> generator_space(SurfaceKind kind, const NumericParams& params, const DivisorClass& source,
                                    const DivisorClass& step, Rng& rng) {
  if (kind == SurfaceKind::Even && source.basis() != BlowdownBasis::Even)
    throw Error(ErrorKind::DomainError, "even algebra needs even-basis classes");
  if (kind == SurfaceKind::Odd && source.basis() != BlowdownBasis::Odd)
    throw Error(ErrorKind::DomainError, "odd algebra needs odd-basis classes");
  const bool odd = odd_base(kind, source);
  const LocalParams lp = local_params(params, source);
  const int sd = step.s_coeff();
  const int fd = step.f_coeff();
  std::vector<int> plus, minus;
  for (int i = 1; i <= step.m(); ++i) {
    const int c = step.e_coeff(i);
    if (c == 1) plus.push_back(i);
    else if (c == -1) minus.push_back(i);
    else if (c != 0) throw Error(ErrorKind::DomainError, "not a generator degree: " + step.to_string());
  }
  if ((!plus.empty() || !minus.empty()) && kind != SurfaceKind::Blowup)
    throw Error(ErrorKind::DomainError, "exceptional generators need the blowup algebra");

  std::vector<DiffOp> out;
  if (plus.empty() && minus.empty()) {
    if (sd == 0 && fd == 1) {
      out = multiplications(params, bc1_symmetric_space(params, params.q * lp.eta, 1, rng).basis);
    } else if (sd == 1 && fd == 0) {
      if (odd) {
        out.push_back(op_D(params.p, params.q, lp.eta, ThetaExpr::thetas({1.0 / (params.q * lp.x0)})));
      } else {
        out = symmetric_ops(params, lp.eta, bc1_symmetric_space(params, params.q * lp.eta_prime, 1, rng).basis);
      }
    } else if (sd == 1 && fd == 1) {
      const int k = odd ? 3 : 4;
      out = symmetric_ops(params, lp.eta, multiplier_space(params, diagonal_multiplier(params, lp, odd), k, rng).basis);
    } else {
      throw Error(ErrorKind::DomainError, "not a generator degree: " + step.to_string());
    }
  } else if (plus.size() == 1 && minus.empty() && sd == 0 && fd == 0) {
    out.push_back(DiffOp::identity(params.p, params.q));
  } else if (plus.empty() && minus.size() == 1 && sd == 0 && fd == 1) {
    const cplx x = lp.points[static_cast<std::size_t>(minus[0] - 1)];
    out.push_back(DiffOp::multiplication(params.p, params.q, symmetric_pair(x, params.q * lp.eta)));
  } else if (plus.empty() && minus.size() == 1 && sd == 1 && fd == 0 && !odd) {
    const cplx x = lp.points[static_cast<std::size_t>(minus[0] - 1)];
    out.push_back(op_D(params.p, params.q, lp.eta, symmetric_pair(x, params.q * lp.eta_prime)));
  } else if (plus.empty() && sd == 1 && fd == 1) {
    std::vector<cplx> zeros;
    for (int i : minus) zeros.push_back(lp.points[static_cast<std::size_t>(i - 1)]);
    const int k = odd ? 3 : 4;
    if (static_cast<int>(zeros.size()) >= k)
      throw Error(ErrorKind::DegenerateMultiplier, "no diagonal generator vanishing at every point");
    const auto space = multiplier_space_vanishing(params, diagonal_multiplier(params, lp, odd), k, zeros, rng);
    out = symmetric_ops(params, lp.eta, space.basis);
  } else {
    throw Error(ErrorKind::DomainError, "not a generator degree: " + step.to_string());
  }
  if (out.empty()) throw Error(ErrorKind::DegenerateMultiplier, "empty generator space at " + source.to_string());
  const DivisorClass target = source + step;
  for (auto& op : out) op.degree_tag = std::make_pair(source, target);
  return out;
}

int expected_dimension(SurfaceKind kind, const DivisorClass& degree) {
  const int d = degree.s_coeff();
  const int dp = degree.f_coeff();
  const bool odd = odd_base(kind, degree);
  const int base = unblown_dimension(odd, d, dp);
  if (kind != SurfaceKind::Blowup || base == 0) return base;
  int loss = 0;
  for (int i = 1; i <= degree.m(); ++i) {
    const int r = -degree.e_coeff(i);
    if (r < 0) continue;
    if (r > d || (!odd && dp < d)) return -1;
    loss += r * (r + 1) / 2;
  }
  return base - loss;
}

DiffOp HomSpace::realize(int i) const {
  std::optional<DiffOp> acc;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const cplx c = combination(i, static_cast<Eigen::Index>(j));
    if (std::abs(c) < 1e-14) continue;
    DiffOp term = ellsurf::realize(words[j]).scaled(c);
    acc = acc ? *acc + term : term;
  }
  if (!acc) throw Error(ErrorKind::DomainError, "zero basis element");
  return *acc;
}

CoeffSamples HomSpace::sample(int i, std::span<const cplx> points) const {
  CoeffSamples out(static_cast<std::size_t>(order) + 1, std::vector<cplx>(points.size()));
  for (std::size_t j = 0; j < words.size(); ++j) {
    const cplx c = combination(i, static_cast<Eigen::Index>(j));
    if (c == cplx{}) continue;
    const auto s = sample_word(words[j], points);
    for (std::size_t k = 0; k < s.size() && k < out.size(); ++k)
      for (std::size_t t = 0; t < points.size(); ++t) out[k][t] += c * s[k][t];
  }
  return out;
}

HomSpace hom_space_numeric(SurfaceKind kind, const NumericParams& params, const DivisorClass& source,
                           const DivisorClass& target, const HomOptions& opts) {
  const DivisorClass degree = target - source;
  const int d = degree.s_coeff();
  const int dp = degree.f_coeff();
  HomSpace h;
  h.order = std::max(d, 0);
  if (d < 0 || dp < 0) return h;
  const bool odd = odd_base(kind, source);
  const SurfaceKind base = kind == SurfaceKind::Blowup ? base_kind(source) : kind;
  const int n0 = unblown_dimension(odd, d, dp);
  const int hint = std::max(opts.expected >= 0 ? std::max(opts.expected, n0) : n0, 1);
  Rng rng(opts.seed);

  const auto paths = lattice_paths(d, dp, opts.path_budget);
  const int max_words = opts.max_words > 0 ? opts.max_words : 4 * hint;
  const int m = source.m();
  const DivisorClass f = DivisorClass::f(source.basis(), m);
  const DivisorClass s = DivisorClass::s(source.basis(), m);
  const DivisorClass steps[3] = {f, s, s + f};

  std::map<std::pair<std::vector<int>, int>, std::vector<DiffOp>> cache;
  auto generators = [&](const DivisorClass& at, int t) -> const std::vector<DiffOp>& {
    auto key = std::make_pair(at.coeffs(), t);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generator_space(base, params, at, steps[t], rng)).first;
    return it->second;
  };

  std::vector<OpWord> words;
  if (d == 0 && dp == 0) {
    words.push_back(OpWord{{DiffOp::identity(params.p, params.q)}});
  } else {
    const int count = std::max<int>(max_words, 1);
    for (int w = 0; w < count; ++w) {
      // spread the draws over the lexicographic list when it is longer than the budget
      const std::size_t np = paths.size();
      const std::size_t idx = np > static_cast<std::size_t>(count) ? static_cast<std::size_t>(w) * np / static_cast<std::size_t>(count)
                                                                   : static_cast<std::size_t>(w) % np;
      const auto& path = paths[idx];
      std::vector<DiffOp> applied;
      DivisorClass cur = source;
      for (int t : path) {
        applied.push_back(random_combination(generators(cur, t), rng));
        cur += steps[t];
      }
      OpWord word;
      word.factors.assign(applied.rbegin(), applied.rend());
      words.push_back(std::move(word));
    }
  }

  const auto pts = sample_points(rng, params.p, 2 * hint + 4);
  const MatrixXc rows = sample_rows(words, pts, h.order);
  const auto rank = numerical_rank(rows, opts.tol);
  const auto keep = independent_rows(rows, rank.rank);
  for (int i : keep) h.words.push_back(words[static_cast<std::size_t>(i)]);
  h.dim = rank.rank;
  h.combination = MatrixXc::Identity(h.dim, h.dim);
  if (kind != SurfaceKind::Blowup || h.dim == 0) return h;

  // generic blowup membership: [T^k] vanishes at q^{-j} x_i for k <= j < r_i
  const LocalParams lp = local_params(params, source);
  std::vector<std::pair<int, cplx>> conditions;
  for (int i = 1; i <= m; ++i) {
    const int r = -degree.e_coeff(i);
    for (int k = 0; k < r && k <= d; ++k)
      for (int j = k; j < r; ++j) conditions.emplace_back(k, qpow(params.q, -j) * lp.points[static_cast<std::size_t>(i - 1)]);
  }
  if (conditions.empty()) return h;
  std::vector<cplx> cpts;
  for (const auto& c : conditions) cpts.push_back(c.second);
  MatrixXc cond(static_cast<Eigen::Index>(conditions.size()), h.dim);
  Eigen::VectorXd colscale(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    const auto s = sample_word(h.words[static_cast<std::size_t>(i)], cpts);
    const auto r = sample_word(h.words[static_cast<std::size_t>(i)], pts);
    double scale = 0.0;
    for (const auto& v : r)
      for (const auto& x : v) scale = std::max(scale, std::abs(x));
    colscale(i) = scale > 0.0 ? 1.0 / scale : 1.0;
    for (std::size_t c = 0; c < conditions.size(); ++c) {
      const auto k = static_cast<std::size_t>(conditions[c].first);
      cond(static_cast<Eigen::Index>(c), i) = (k < s.size() ? s[k][c] : cplx{}) * colscale(i);
    }
  }
  for (Eigen::Index r = 0; r < cond.rows(); ++r) {
    const double n = cond.row(r).norm();
    if (n > 0.0) cond.row(r) /= n;
  }
  Eigen::JacobiSVD<MatrixXc> svd(cond, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int crank = 0;
  while (crank < sv.size() && sv(crank) > opts.tol * sv(0)) ++crank;
  if (crank > 0 && crank < sv.size() && sv(crank) > 0.0 && sv(crank - 1) / sv(crank) < kRankGap)
    throw Error(ErrorKind::IndeterminateRank, "blowup conditions have no clear rank");
  const int kdim = h.dim - crank;
  MatrixXc comb(kdim, h.dim);
  for (int i = 0; i < kdim; ++i)
    for (int j = 0; j < h.dim; ++j) comb(i, j) = svd.matrixV()(j, crank + i) * colscale(j);
  h.combination = comb;
  h.dim = kdim;
  return h;
}

int span_rank(std::span<const OpWord> words, int order, cplx p, Rng& rng, double tol, int points) {
  if (words.empty()) return 0;
  const int n = points > 0 ? points : static_cast<int>(2 * words.size()) / (order + 1) + 6;
  const auto pts = sample_points(rng, p, n);
  return numerical_rank(sample_rows(words, pts, order), tol).rank;
}

bool in_span(const HomSpace& space, const DiffOp& op, cplx p, Rng& rng, double tol) {
  const int order = std::max(space.order, op.order());
  const auto pts = sample_points(rng, p, 2 * space.dim + 6);
  MatrixXc rows(space.dim + 1, static_cast<Eigen::Index>(pts.size()) * (order + 1));
  for (int i = 0; i < space.dim; ++i) write_row(space.sample(i, pts), order, rows, i);
  write_row(sample_op(op, pts), order, rows, space.dim);
  return numerical_rank(rows, tol).rank == space.dim;
}

int resonant_span_dim(const NumericParams& params, int l, int d, int dp, const HomOptions& opts) {
  const DivisorClass zero = DivisorClass::zero(BlowdownBasis::Even, 0);
  const DivisorClass target = DivisorClass::sf(BlowdownBasis::Even, d, dp);
  const DivisorClass mid = DivisorClass::sf(BlowdownBasis::Even, l, -l);
  const HomSpace plain = hom_space_numeric(SurfaceKind::Even, params, zero, target, opts);
  const HomSpace left = hom_space_numeric(SurfaceKind::Even, params, mid, target, opts);
  const DiffOp lower = lowering_Dl(params.p, params.q, l, params.eta);
  std::vector<OpWord> words = plain.words;
  for (const auto& w : left.words) {
    OpWord x = w;
    x.factors.push_back(lower);
    words.push_back(std::move(x));
  }
  Rng rng(opts.seed + 17);
  return span_rank(words, d, params.p, rng, opts.tol);
}

CentralExpansion central_T(const NumericParams& params, cplx v, cplx vp, cplx w, Rng& rng) {
  const cplx p = params.p, q = params.q, eta = params.eta, etap = params.eta_prime;
  const cplx den_args[] = {eta / (q * v * vp), etap / (q * v * vp), q * v / w, q * vp / w};
  const cplx den = theta_p(p, den_args);
  if (std::abs(den) < 1e-10) throw Error(ErrorKind::DegenerateChoice, "central element denominator vanishes");
  auto b = [&](cplx x, cplx y) {
    const cplx num_args[] = {y / x, eta * etap / (q * x * y * v * vp), x / v, x / vp, y / w, q * q * v * vp / (w * y)};
    return theta_p(p, num_args) / den;
  };
  const auto left_space = multiplier_space(params, eta * etap / (p * p * q), 4, rng);
  const auto right_space = multiplier_space(params, q * eta * etap / (p * p), 4, rng);

  const int n = 10;
  const auto xs = sample_points(rng, p, n);
  const auto ys = sample_points(rng, p, n);
  const MatrixXc U = sample_matrix(left_space.basis, xs, p).transpose();   // n x 4
  const MatrixXc W = sample_matrix(right_space.basis, ys, p).transpose();  // n x 4
  MatrixXc B(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) B(a, c) = b(xs[static_cast<std::size_t>(a)], ys[static_cast<std::size_t>(c)]);
  // B = U C W^T
  const MatrixXc CWt = U.colPivHouseholderQr().solve(B);                    // 4 x n
  const MatrixXc C = W.colPivHouseholderQr().solve(CWt.transpose()).transpose();  // 4 x 4

  CentralExpansion out;
  const auto xt = sample_points(rng, p, 6);
  const auto yt = sample_points(rng, p, 6);
  const MatrixXc Ut = sample_matrix(left_space.basis, xt, p).transpose();
  const MatrixXc Wt = sample_matrix(right_space.basis, yt, p).transpose();
  const MatrixXc fit = Ut * C * Wt.transpose();
  double worst = 0.0, scale = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c) {
      const cplx exact = b(xt[static_cast<std::size_t>(a)], yt[static_cast<std::size_t>(c)]);
      worst = std::max(worst, std::abs(exact - fit(a, c)));
      scale = std::max(scale, std::abs(exact));
    }
  out.decomposition_residual = worst / scale;

  std::optional<DiffOp> acc;
  for (int i = 0; i < 4; ++i) {
    ThetaSum right;
    for (int j = 0; j < 4; ++j) {
      ThetaExpr t = right_space.basis[static_cast<std::size_t>(j)];
      t.scale *= C(i, j);
      right.terms.push_back(std::move(t));
    }
    ThetaSum left(left_space.basis[static_cast<std::size_t>(i)]);
    DiffOp term = compose(op_D(p, q, eta / q, left), op_D(p, q, eta, right));
    out.left.push_back(left);
    out.right.push_back(right);
    acc = acc ? *acc + term : term;
  }
  out.op = *acc;
  return out;
}

DivisorClass GeneratorWord::source() const { return DivisorClass::sf(BlowdownBasis::Even, d, dp); }

DivisorClass GeneratorWord::target() const {
  int a = d, b = dp;
  for (const auto& st : steps) {
    if (st.type != StepType::Fiber) ++a;
    if (st.type != StepType::Section) ++b;
  }
  return DivisorClass::sf(BlowdownBasis::Even, a, b);
}

DiffOp realize(const GeneratorWord& word, cplx p, cplx q) {
  int a = word.d, b = word.dp;
  std::optional<DiffOp> acc;
  for (const auto& st : word.steps) {
    DiffOp g = st.type == StepType::Fiber ? DiffOp::multiplication(p, q, st.fn)
                                          : op_D(p, q, qpow(q, -a) * word.eta, st.fn);
    acc = acc ? compose(g, *acc) : g;
    if (st.type != StepType::Fiber) ++a;
    if (st.type != StepType::Section) ++b;
  }
  DiffOp out = acc ? acc->scaled(word.coefficient) : DiffOp::identity(p, q).scaled(word.coefficient);
  out.degree_tag = std::make_pair(word.source(), word.target());
  return out;
}

DiffOp realize(std::span<const GeneratorWord> sum, cplx p, cplx q) {
  if (sum.empty()) throw Error(ErrorKind::DomainError, "empty word sum");
  DiffOp acc = realize(sum.front(), p, q);
  for (std::size_t i = 1; i < sum.size(); ++i) acc = acc + realize(sum[i], p, q);
  acc.degree_tag = std::make_pair(sum.front().source(), sum.front().target());
  return acc;
}

namespace {

GeneratorWord single_step(const GeneratorWord& word, std::size_t i, int d, int dp) {
  GeneratorWord single;
  single.d = d;
  single.dp = dp;
  single.eta = word.eta;
  single.eta_prime = word.eta_prime;
  single.steps.push_back(word.steps[i]);
  if (i == 0) single.coefficient = word.coefficient;
  return single;
}

}  // namespace

OpWord factorized(const GeneratorWord& word, cplx p, cplx q) {
  OpWord out;
  int a = word.d, b = word.dp;
  for (std::size_t i = 0; i < word.steps.size(); ++i) {
    const GeneratorWord single = single_step(word, i, a, b);
    out.factors.insert(out.factors.begin(), realize(single, p, q));
    a = single.target().s_coeff();
    b = single.target().f_coeff();
  }
  if (out.factors.empty()) out.factors.push_back(DiffOp::identity(p, q).scaled(word.coefficient));
  return out;
}

GeneratorWord random_word(const NumericParams& params, int d, int dp, std::span<const StepType> steps, Rng& rng) {
  GeneratorWord word;
  word.d = d;
  word.dp = dp;
  word.eta = params.eta;
  word.eta_prime = params.eta_prime;
  int a = d, b = dp;
  for (StepType t : steps) {
    const LocalParams lp = local_params(params, DivisorClass::sf(BlowdownBasis::Even, a, b));
    word.steps.push_back(WordStep{t, random_combination(even_generator_functions(params, lp, t, rng), rng)});
    if (t != StepType::Fiber) ++a;
    if (t != StepType::Section) ++b;
  }
  return word;
}

GeneratorWord fourier_word(const GeneratorWord& word) {
  GeneratorWord out = word;
  std::swap(out.d, out.dp);
  std::swap(out.eta, out.eta_prime);
  for (auto& st : out.steps) {
    if (st.type == StepType::Fiber) st.type = StepType::Section;
    else if (st.type == StepType::Section) st.type = StepType::Fiber;
  }
  return out;
}

OpWord adjoint_word(const GeneratorWord& word, cplx p, cplx q) {
  const DivisorClass two = DivisorClass::sf(BlowdownBasis::Even, 2, 2);
  OpWord out;
  int a = word.d, b = word.dp;
  for (std::size_t i = 0; i < word.steps.size(); ++i) {
    const GeneratorWord single = single_step(word, i, a, b);
    const DiffOp g = realize(single, p, q);
    DiffOp ad = adjoint(g, word.eta, single.d, single.target().s_coeff());
    ad.degree_tag = std::make_pair(two - single.target(), two - single.source());
    out.factors.push_back(std::move(ad));
    a = single.target().s_coeff();
    b = single.target().f_coeff();
  }
  if (out.factors.empty()) {
    DiffOp ad = adjoint(DiffOp::identity(p, q).scaled(word.coefficient), word.eta, word.d, word.d);
    ad.degree_tag = std::make_pair(two - word.source(), two - word.source());
    out.factors.push_back(std::move(ad));
  }
  return out;
}

bool surjectivity_check(SurfaceKind kind, const NumericParams& params, const DivisorClass& first,
                        const DivisorClass& second, double tol, std::uint64_t seed) {
  const DivisorClass zero = first - first;
  HomOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  const HomSpace a = hom_space_numeric(kind, params, zero, first, opts);
  opts.seed = seed + 1;
  const HomSpace b = hom_space_numeric(kind, params, first, first + second, opts);
  opts.seed = seed + 2;
  const HomSpace full = hom_space_numeric(kind, params, zero, first + second, opts);
  if (full.dim == 0) return true;
  if (a.dim == 0 || b.dim == 0) return false;
  Rng rng(seed + 3);
  const auto pts = sample_points(rng, params.p, 2 * full.dim + 6);
  const int order = full.order;
  MatrixXc rows(a.dim * b.dim, static_cast<Eigen::Index>(pts.size()) * (order + 1));
  Eigen::Index r = 0;
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      CoeffSamples acc(static_cast<std::size_t>(order) + 1, std::vector<cplx>(pts.size()));
      for (std::size_t u = 0; u < b.words.size(); ++u) {
        const cplx cb = b.combination(i, static_cast<Eigen::Index>(u));
        if (cb == cplx{}) continue;
        for (std::size_t v = 0; v < a.words.size(); ++v) {
          const cplx ca = a.combination(j, static_cast<Eigen::Index>(v));
          if (ca == cplx{}) continue;
          OpWord w = b.words[u];
          w.factors.insert(w.factors.end(), a.words[v].factors.begin(), a.words[v].factors.end());
          const auto s = sample_word(w, pts);
          for (std::size_t k = 0; k < s.size() && k < acc.size(); ++k)
            for (std::size_t t = 0; t < pts.size(); ++t) acc[k][t] += cb * ca * s[k][t];
        }
      }
      write_row(acc, order, rows, r++);
    }
  return numerical_rank(rows, tol).rank == full.dim;
}

std::vector<std::vector<DiffOp>> equation_operators(const NumericParams& params,
                                                    const std::vector<std::vector<ThetaSum>>& entries,
                                                    const std::vector<int>& fiber_degrees, Rng& rng) {
  const auto pts = sample_points(rng, params.p, 8);
  std::vector<std::vector<DiffOp>> out;
  for (const auto& row : entries) {
    if (row.size() != fiber_degrees.size()) throw Error(ErrorKind::DomainError, "column count mismatch");
    std::vector<DiffOp> ops;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int dp = fiber_degrees[j];
      const cplx a = params.q * params.eta_prime * std::pow(params.eta, dp) / std::pow(params.p, dp + 1);
      const int k = 2 * dp + 2;
      for (const auto& z : pts) {
        const cplx lhs = row[j].eval(params.p * z, params.p, params.q);
        const cplx rhs = a * std::pow(z, -k) * row[j].eval(z, params.p, params.q);
        if (std::abs(lhs - rhs) > 1e-8 * std::max(std::abs(rhs), std::abs(lhs)))
          throw Error(ErrorKind::MultiplierMismatch, "entry (" + std::to_string(out.size()) + "," + std::to_string(j) + ")");
      }
      ops.push_back(op_D(params.p, params.q, params.eta, row[j]));
    }
    out.push_back(std::move(ops));
  }
  return out;
}

DiffOp frobenius_functor(const NumericParams& params, int r, const DiffOp& op) {
  if (r < 1) throw Error(ErrorKind::NotTorsion, "order must be positive");
  for (int j = 1; j < r; ++j)
    if (std::abs(qpow(params.q, j) - 1.0) < 1e-12) throw Error(ErrorKind::NotTorsion, "q has smaller order");
  if (std::abs(qpow(params.q, r) - 1.0) > 1e-12) throw Error(ErrorKind::NotTorsion, "q^r != 1");
  DiffOp out;
  out.p = params.p;
  out.q = params.q;
  out.coeffs.assign(static_cast<std::size_t>(r * op.order() + 1), ThetaSum::zero());
  for (int k = 0; k <= op.order(); ++k) {
    ThetaSum c;
    for (ThetaExpr t : op.coeff(k).terms) {
      for (const auto& pa : t.poch) t.atoms.push_back(ThetaAtom{pa.a, pa.power, pa.k * pa.exp, 1});
      t.poch.clear();
      for (auto& at : t.atoms) at.nome *= r;
      c.terms.push_back(t.power_substituted(r));
    }
    out.coeffs[static_cast<std::size_t>(r * k)] = c;
  }
  return out;
}

cplx elliptic_gauge_coefficient(const NumericParams& params, const DiffOp& op, const DivisorClass& source,
                                const DivisorClass& target, int k, cplx z) {
  const cplx q = params.q, x0 = params.x.at(0);
  auto phi = [&](const DivisorClass& c, cplx u) {
    const int d = c.s_coeff(), dp = c.f_coeff();
    const cplx args[] = {u / (qpow(q, d + 1 - dp) * x0), params.eta / (qpow(q, 2 * d - dp) * x0 * u)};
    return elliptic_gamma(params.p, q, args);
  };
  return op.coeff_at(k, z) * phi(source, qpow(q, k) * z) / phi(target, z);
}

}  // namespace ellsurf
