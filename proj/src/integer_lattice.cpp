#include "ellsurf/integer_lattice.hpp"

#include <numeric>
#include <utility>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void row_op(IntMat& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= k * m[src][j];
}

void col_op(IntMat& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (auto& row : m) row[dst] -= k * row[src];
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntVec vec_mat(const IntVec& v, const IntMat& m) {
  IntVec out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mat(row, b));
  return out;
}

SmithForm smith_normal_form(const IntMat& a, std::size_t cols) {
  const std::size_t rows = a.size();
  IntMat d = a;
  for (const auto& row : d)
    if (row.size() != cols) throw Error(ErrorKind::DomainError, "ragged integer matrix");
  SmithForm out{identity_matrix(rows), identity_matrix(cols), {}};
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    // smallest nonzero entry in the trailing block as pivot
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (!found || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;
    std::swap(d[t], d[pr]);
    std::swap(out.U[t], out.U[pr]);
    swap_cols(d, t, pc);
    swap_cols(out.V, t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        const std::int64_t k = floor_div(d[i][t], d[t][t]);
        row_op(d, i, t, k);
        row_op(out.U, i, t, k);
        if (d[i][t] != 0) {
          clean = false;
          std::swap(d[t], d[i]);
          std::swap(out.U[t], out.U[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        const std::int64_t k = floor_div(d[t][j], d[t][t]);
        col_op(d, j, t, k);
        col_op(out.V, j, t, k);
        if (d[t][j] != 0) {
          clean = false;
          swap_cols(d, t, j);
          swap_cols(out.V, t, j);
        }
      }
      if (!clean) continue;
      // divisibility of the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) d[t][c] += d[i][c];
            for (std::size_t c = 0; c < rows; ++c) out.U[t][c] += out.U[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& v : d[t]) v = -v;
      for (auto& v : out.U[t]) v = -v;
    }
  }
  out.diagonal.resize(diag);
  for (std::size_t t = 0; t < diag; ++t) out.diagonal[t] = d[t][t];
  return out;
}

QuotientGroup::QuotientGroup(std::size_t n, const IntMat& relations) : n_(n) {
  factors_.assign(n, 0);
  if (relations.empty()) {
    V_ = identity_matrix(n);
    return;
  }
  const auto snf = smith_normal_form(relations, n);
  V_ = snf.V;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) factors_[i] = snf.diagonal[i];
}

IntVec QuotientGroup::canonical(const IntVec& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DomainError, "vector outside the ambient lattice");
  IntVec y = vec_mat(v, V_);
  for (std::size_t i = 0; i < n_; ++i)
    if (factors_[i] != 0) y[i] = mod_pos(y[i], factors_[i]);
  return y;
}

bool QuotientGroup::is_zero(const IntVec& v) const {
  for (auto c : canonical(v))
    if (c != 0) return false;
  return true;
}

std::int64_t QuotientGroup::order(const IntVec& v) const {
  const IntVec y = canonical(v);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (y[i] == 0) continue;
    if (factors_[i] == 0) return 0;
    ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], y[i]));
  }
  return ord;
}

std::optional<std::int64_t> QuotientGroup::multiple_of(const IntVec& v, const IntVec& g) const {
  const IntVec y = canonical(v);
  const IntVec h = canonical(g);
  const std::int64_t ord = order(g);
  if (ord == 0) {
    // l is forced by any free coordinate where g is nonzero
    std::optional<std::int64_t> l;
    for (std::size_t i = 0; i < n_; ++i) {
      if (factors_[i] != 0 || h[i] == 0) continue;
      if (y[i] % h[i] != 0) return std::nullopt;
      l = y[i] / h[i];
      break;
    }
    if (!l) return std::nullopt;
    IntVec diff(n_);
    for (std::size_t i = 0; i < n_; ++i) diff[i] = v[i] - *l * g[i];
    if (!is_zero(diff)) return std::nullopt;
    return l;
  }
  for (std::size_t i = 0; i < n_; ++i)
    if (factors_[i] == 0 && y[i] != 0) return std::nullopt;
  IntVec diff(n_);
  for (std::int64_t l = 0; l < ord; ++l) {
    for (std::size_t i = 0; i < n_; ++i) diff[i] = v[i] - l * g[i];
    if (is_zero(diff)) return l;
  }
  return std::nullopt;
}

}  // namespace ellsurf
