#include "ellsurf/integrable_dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

constexpr int kEpsUp[2][2] = {{0, 1}, {-1, 0}};    // eps^{ij}
constexpr int kEpsDown[2][2] = {{0, -1}, {1, 0}};  // eps_{ij}, inverse of eps^{ij}

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
T det3(const Mat4<T>& m, const std::array<int, 3>& r, const std::array<int, 3>& c) {
  auto e = [&](int i, int j) -> const T& { return m[static_cast<std::size_t>(r[i])][static_cast<std::size_t>(c[j])]; };
  T v = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1));
  v -= e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0));
  v += e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  return v;
}

std::array<int, 3> others(int skip) {
  std::array<int, 3> out{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != skip) out[static_cast<std::size_t>(n++)] = i;
  return out;
}

template <class T>
Mat4<T> adjugate(const Mat4<T>& m) {
  Mat4<T> adj{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      T minor = det3(m, others(j), others(i));
      if ((i + j) % 2 != 0) minor = -minor;
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = minor;
    }
  return adj;
}

template <class T>
T det4(const Mat4<T>& m) {
  T v = T(0);
  for (int j = 0; j < 4; ++j) {
    T minor = det3(m, others(0), others(j));
    if (j % 2 != 0) minor = -minor;
    v += m[0][static_cast<std::size_t>(j)] * minor;
  }
  return v;
}

std::size_t slot_index(const std::array<int, 4>& idx) {
  return RatTensor::index(idx[0], idx[1], idx[2], idx[3]);
}

template <class T>
Mat4<T> flattening(const std::array<T, 16>& a, const Contraction& c) {
  Mat4<T> x{};
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      for (int e = 0; e < 2; ++e)
        for (int f = 0; f < 2; ++f) {
          T sum = T(0);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              const int w = kEpsUp[i][e] * kEpsUp[j][f];
              if (w == 0) continue;
              std::array<int, 4> idx{};
              idx[static_cast<std::size_t>(c.a_contracted[0])] = i;
              idx[static_cast<std::size_t>(c.a_contracted[1])] = j;
              idx[static_cast<std::size_t>(c.a_free[0])] = u;
              idx[static_cast<std::size_t>(c.a_free[1])] = v;
              if (w > 0) sum += a[slot_index(idx)];
              else sum -= a[slot_index(idx)];
            }
          x[static_cast<std::size_t>(2 * u + v)][static_cast<std::size_t>(2 * e + f)] = sum;
        }
  return x;
}

// B from Y = -W E, W the adjugate or inverse of the flattening.
template <class T>
std::array<T, 16> assemble(const Mat4<T>& w, const Contraction& c) {
  std::array<T, 16> b{};
  for (int e = 0; e < 2; ++e)
    for (int f = 0; f < 2; ++f)
      for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h) {
          T sum = T(0);
          for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
              const int s = kEpsDown[u][g] * kEpsDown[v][h];
              if (s == 0) continue;
              const T& wv = w[static_cast<std::size_t>(2 * e + f)][static_cast<std::size_t>(2 * u + v)];
              if (s > 0) sum -= wv;
              else sum += wv;
            }
          std::array<int, 4> idx{};
          idx[static_cast<std::size_t>(c.b_contracted[0])] = e;
          idx[static_cast<std::size_t>(c.b_contracted[1])] = f;
          idx[static_cast<std::size_t>(c.b_free[0])] = g;
          idx[static_cast<std::size_t>(c.b_free[1])] = h;
          b[slot_index(idx)] = sum;
        }
  return b;
}

const Contraction kVertical{{0, 1}, {2, 3}, {3, 1}, {2, 0}};
const Contraction kHorizontal{{0, 2}, {1, 3}, {0, 1}, {2, 3}};

// Polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

mpq_class eval_poly(const Poly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  Poly p{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // p = p * (x - xs[k]) + dd[k]
    Poly next(p.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * xs[k];
    }
    next[0] += dd[k];
    p = std::move(next);
  }
  trim(p);
  return p;
}

Poly poly_mod(Poly a, const Poly& b) {
  while (!a.empty() && degree(a) >= degree(b)) {
    const mpq_class factor = a.back() / b.back();
    const int shift = degree(a) - degree(b);
    for (std::size_t i = 0; i < b.size(); ++i) a[static_cast<std::size_t>(shift) + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly make_monic(Poly a) {
  if (a.empty()) return a;
  const mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = make_monic(poly_mod(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

bool divides_exactly(std::array<long long, 4>& poly, int& deg, const std::vector<long long>& divisor) {
  // poly: monic coefficients highest first over the current degree
  const int dd = static_cast<int>(divisor.size()) - 1;
  if (dd > deg) return false;
  std::vector<long long> work(poly.begin(), poly.begin() + deg + 1);
  std::vector<long long> quot(static_cast<std::size_t>(deg - dd + 1), 0);
  for (int i = 0; i <= deg - dd; ++i) {
    const long long c = work[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i)] = c;
    for (int j = 0; j <= dd; ++j) work[static_cast<std::size_t>(i + j)] -= c * divisor[static_cast<std::size_t>(j)];
  }
  for (int i = deg - dd + 1; i <= deg; ++i)
    if (work[static_cast<std::size_t>(i)] != 0) return false;
  std::array<long long, 4> next{};
  for (std::size_t i = 0; i < quot.size(); ++i) next[i] = quot[i];
  poly = next;
  deg -= dd;
  return true;
}

}  // namespace

RatTensor RatTensor::random_integer(Rng& rng, int bound) {
  RatTensor t;
  for (auto& e : t.entries) e = rng.uniform_int(-bound, bound);
  return t;
}

bool RatTensor::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const mpq_class& e) { return e == 0; });
}

bool projectively_equal(const RatTensor& a, const RatTensor& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = i + 1; j < 16; ++j)
      if (a.entries[i] * b.entries[j] != a.entries[j] * b.entries[i]) return false;
  return true;
}

RatTensor permute_slots(const RatTensor& a, const std::array<int, 4>& target) {
  RatTensor out;
  for (int n = 0; n < 16; ++n) {
    const std::array<int, 4> src{(n >> 3) & 1, (n >> 2) & 1, (n >> 1) & 1, n & 1};
    std::array<int, 4> dst{};
    for (std::size_t s = 0; s < 4; ++s) dst[static_cast<std::size_t>(target[s])] = src[s];
    out.entries[slot_index(dst)] = a.entries[static_cast<std::size_t>(n)];
  }
  return out;
}

RatTensor solve_contraction(const RatTensor& a, const Contraction& c) {
  const auto x = flattening(a.entries, c);
  RatTensor out;
  out.entries = assemble(adjugate(x), c);
  if (out.is_zero()) throw Error(ErrorKind::SingularFlattening, "flattening has rank at most 2");
  return out;
}

mpq_class flattening_det(const RatTensor& a, const Contraction& c) { return det4(flattening(a.entries, c)); }

Contraction r_contraction(int slot) {
  switch (slot) {
    case 1: return Contraction{{1, 2}, {0, 3}, {1, 2}, {0, 3}};
    case 2: return Contraction{{0, 2}, {1, 3}, {0, 2}, {1, 3}};
    case 3: return Contraction{{0, 1}, {2, 3}, {0, 1}, {2, 3}};
    default: throw Error(ErrorKind::DomainError, "R slot must be 1, 2 or 3");
  }
}

RatTensor apply_R(const RatTensor& a, int slot) {
  const auto c = r_contraction(slot);
  if (flattening_det(a, c) == 0) throw Error(ErrorKind::SingularFlattening, "R flattening is singular");
  return solve_contraction(a, c);
}

mpq_class delta(const RatTensor& a, int slot) { return flattening_det(a, r_contraction(slot)); }

RatTensor next_horizontal(const RatTensor& a) {
  if (flattening_det(a, kHorizontal) == 0) throw Error(ErrorKind::SingularFlattening, "singular flattening");
  return solve_contraction(a, kHorizontal);
}

RatTensor next_vertical(const RatTensor& a) {
  if (flattening_det(a, kVertical) == 0) throw Error(ErrorKind::SingularFlattening, "singular flattening");
  return solve_contraction(a, kVertical);
}

RatTensor shift11(const RatTensor& a) { return permute_slots(a, {3, 2, 1, 0}); }

RatTensor tensor_from_relations(const std::array<std::array<std::array<std::array<mpq_class, 2>, 2>, 2>, 2>& c) {
  // C_ij^{mn} = eps^{km} eps^{ln} A_ijkl, so A_ij = E^{-T} C_ij E^{-1} = -E C_ij E
  RatTensor out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          mpq_class v = 0;
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
              const int w = kEpsUp[k][m] * kEpsUp[l][n];
              if (w != 0) v -= w * c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                    [static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            }
          out.at(i, j, k, l) = v;
        }
  return out;
}

RatTensor weyl_tensor(int sign) {
  std::array<std::array<std::array<std::array<mpq_class, 2>, 2>, 2>, 2> c{};
  for (auto& a : c)
    for (auto& b : a)
      for (auto& d : b)
        for (auto& e : d) e = 0;
  // x_i y_j = y_j x_i
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
  c[1][1][0][0] = sign;
  return tensor_from_relations(c);
}

RatTensor flip_y2(const RatTensor& a) {
  // y_2 appears in slot 1 (left side) and, through eps, slot 2
  RatTensor out = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          // eps^{km} pairs k with m = 1 - k, so y_m = y_2 exactly when k = 0
          const int flips = (j == 1 ? 1 : 0) + (k == 0 ? 1 : 0);
          if (flips % 2 == 1) out.at(i, j, k, l) = -a.at(i, j, k, l);
        }
  return out;
}

namespace {

// Degree of a polynomial map restricted to random rational lines; `steps`
// polynomial maps of degree 3 are applied, then common factors removed.
int line_degree(const RatTensor& start, const std::vector<Contraction>& steps, int expected, Rng& rng) {
  long long primitive = 1;
  for (std::size_t i = 0; i < steps.size(); ++i) primitive *= 3;
  const int samples = static_cast<int>(std::max<long long>(4LL * expected + 1, primitive + 2));
  constexpr int kExtra = 3;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const RatTensor dir = RatTensor::random_integer(rng);
    std::vector<mpq_class> ts;
    std::vector<std::array<mpq_class, 16>> values;
    bool degenerate = false;
    for (int n = 0; n < samples + kExtra; ++n) {
      mpq_class t(n + 1, 1 + attempt);
      RatTensor a;
      for (std::size_t i = 0; i < 16; ++i) a.entries[i] = start.entries[i] + t * dir.entries[i];
      for (const auto& c : steps) {
        a.entries = assemble(adjugate(flattening(a.entries, c)), c);
        if (a.is_zero()) break;
      }
      if (a.is_zero()) {
        degenerate = true;
        break;
      }
      ts.push_back(t);
      values.push_back(a.entries);
    }
    if (degenerate) continue;
    const std::vector<mpq_class> xs(ts.begin(), ts.begin() + samples);
    Poly g;
    int max_deg = -1;
    for (std::size_t c = 0; c < 16; ++c) {
      std::vector<mpq_class> ys;
      for (int n = 0; n < samples; ++n) ys.push_back(values[static_cast<std::size_t>(n)][c]);
      Poly p = interpolate(xs, ys);
      for (int n = samples; n < samples + kExtra; ++n)
        if (eval_poly(p, ts[static_cast<std::size_t>(n)]) != values[static_cast<std::size_t>(n)][c])
          throw Error(ErrorKind::InterpolationRankDeficit, "coordinate is not reproduced at check points");
      max_deg = std::max(max_deg, degree(p));
      g = g.empty() ? make_monic(p) : poly_gcd(g, p);
    }
    if (max_deg < 0 || g.empty()) continue;
    return max_deg - degree(g);
  }
  throw Error(ErrorKind::DegenerateLine, "every sampled line met the indeterminacy locus");
}

}  // namespace

int iterate_degree(const RatTensor& start, int d, Rng& rng) {
  if (d < 0) throw Error(ErrorKind::DomainError, "negative iterate");
  return line_degree(start, std::vector<Contraction>(static_cast<std::size_t>(d), kVertical), 2 * d * d + 1, rng);
}

int word_degree(const RatTensor& start, const std::vector<int>& word, Rng& rng) {
  std::vector<Contraction> steps;
  // the last letter acts first
  for (auto it = word.rbegin(); it != word.rend(); ++it) steps.push_back(r_contraction(*it));
  return line_degree(start, steps, 0, rng);
}

IntMatrix3 reflection_matrix(int generator) {
  switch (generator) {
    case 1: return {{{-1, 2, 2}, {0, 1, 0}, {0, 0, 1}}};
    case 2: return {{{1, 0, 0}, {2, -1, 2}, {0, 0, 1}}};
    case 3: return {{{1, 0, 0}, {0, 1, 0}, {2, 2, -1}}};
    default: throw Error(ErrorKind::DomainError, "generator must be 1, 2 or 3");
  }
}

IntMatrix3 word_matrix(const std::vector<int>& word) {
  IntMatrix3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int g : word) {
    const auto s = reflection_matrix(g);
    IntMatrix3 out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[i][j] += m[i][k] * s[k][j];
    m = out;
  }
  return m;
}

DegreeEntropy coxeter_degree_entropy(const std::vector<int>& word) {
  const auto m = word_matrix(word);
  DegreeEntropy out;
  long long sum = 0;
  for (const auto& row : m)
    for (long long v : row) sum += v;
  out.degree = sum - 2;

  const long long tr = m[0][0] + m[1][1] + m[2][2];
  const long long c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                       m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  out.char_poly = {1, -tr, c2, -det};

  // Kronecker: all roots on the unit circle iff a product of cyclotomic factors
  std::array<long long, 4> rest = out.char_poly;
  int deg = 3;
  const std::vector<std::vector<long long>> cyclotomic{{1, -1}, {1, 1}, {1, 1, 1}, {1, 0, 1}, {1, -1, 1}};
  bool progress = true;
  while (deg > 0 && progress) {
    progress = false;
    for (const auto& c : cyclotomic)
      if (divides_exactly(rest, deg, c)) {
        progress = true;
        break;
      }
  }
  out.zero_entropy = deg == 0;

  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(0, 0) = static_cast<double>(tr);
  companion(0, 1) = static_cast<double>(-c2);
  companion(0, 2) = static_cast<double>(det);
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  const auto ev = companion.eigenvalues();
  double radius = 0.0;
  for (int i = 0; i < 3; ++i) radius = std::max(radius, std::abs(ev[i]));
  out.entropy = out.zero_entropy ? 0.0 : std::log(radius);
  return out;
}

EllipticData random_elliptic_data(const NumericParams& params, cplx a1, cplx a2, cplx q_factor, Rng& rng) {
  return EllipticData{params.p, multiplier_space(params, a1, 2, rng), multiplier_space(params, a2 * q_factor, 2, rng),
                      multiplier_space(params, a1 * q_factor, 2, rng), multiplier_space(params, a2, 2, rng)};
}

EllipticData shift_first_bundle(const EllipticData& data, cplx q_factor) {
  EllipticData out;
  out.p = data.p;
  out.l1 = data.l1_q;
  out.l2_q = data.l2_q;
  out.l2 = data.l2;
  out.l1_q = data.l1;
  out.l1_q.multiplier = data.l1.multiplier * q_factor * q_factor;
  for (auto& f : out.l1_q.basis) f = f.shifted(1.0 / q_factor);
  return out;
}

EllipticTensor elliptic_tensor(const EllipticData& data, Rng& rng) {
  constexpr int kPoints = 16;
  const auto pts = sample_points(rng, data.p, kPoints);
  const cplx q_unused{0.5, 0.0};
  auto eval = [&](const ThetaSpace& s, int i, cplx z) {
    return s.basis[static_cast<std::size_t>(i)].eval(z, data.p, q_unused);
  };
  Eigen::Matrix<cplx, kPoints, 4> lhs, rhs;
  for (int n = 0; n < kPoints; ++n) {
    const cplx z = pts[static_cast<std::size_t>(n)];
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        lhs(n, 2 * a + b) = eval(data.l1, a, z) * eval(data.l2_q, b, z);
        rhs(n, 2 * a + b) = eval(data.l1_q, a, z) * eval(data.l2, b, z);
      }
  }
  const MatrixXc rhs_dyn = rhs;
  if (numerical_rank(rhs_dyn.transpose()).rank < 4)
    throw Error(ErrorKind::IndeterminateRank, "product basis is degenerate");
  // lhs = rhs * M^T
  const Eigen::Matrix4cd mt = rhs.colPivHouseholderQr().solve(lhs);
  EllipticTensor out;
  out.relation = mt.transpose();
  out.residual = (rhs * mt - lhs).norm() / lhs.norm();
  // x_i <-> u_i, y_j <-> v_j, y_m <-> v'_m, x_n <-> u'_n: C_ij^{mn} = M(ij, nm).
  // The two middle slots come out exchanged relative to tensor_from_relations;
  // this is the ordering in which next_vertical is the shift L1 -> L1 (x) q.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cplx v{};
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
              const int w = kEpsUp[k][m] * kEpsUp[l][n];
              if (w != 0) v -= static_cast<double>(w) * out.relation(2 * i + j, 2 * n + m);
            }
          out.a[RatTensor::index(i, k, j, l)] = v;
        }
  return out;
}

std::array<cplx, 16> solve_contraction(const std::array<cplx, 16>& a, const Contraction& c) {
  const auto x = flattening(a, c);
  Eigen::Matrix4cd xm;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) xm(i, j) = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::FullPivLU<Eigen::Matrix4cd> lu(xm);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularFlattening, "numeric flattening is singular");
  const Eigen::Matrix4cd inv = lu.inverse();
  Mat4<cplx> w{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inv(i, j);
  return assemble(w, c);
}

std::array<cplx, 16> next_vertical(const std::array<cplx, 16>& a) { return solve_contraction(a, kVertical); }

double projective_distance(const std::array<cplx, 16>& a, const std::array<cplx, 16>& b) {
  // distance after the optimal scalar, relative to |a|
  cplx num{};
  double nb = 0.0, na = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    num += std::conj(b[i]) * a[i];
    nb += std::norm(b[i]);
    na += std::norm(a[i]);
  }
  if (nb == 0.0 || na == 0.0) return na == nb ? 0.0 : 1.0;
  const cplx lambda = num / nb;
  double r = 0.0;
  for (std::size_t i = 0; i < 16; ++i) r += std::norm(a[i] - lambda * b[i]);
  return std::sqrt(r / na);
}

double decomposability_residual(const Eigen::Vector4cd& v) {
  const double n = v.squaredNorm();
  if (n == 0.0) return 0.0;
  return std::abs(v(0) * v(3) - v(1) * v(2)) / n;
}

}  // namespace ellsurf
