#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ellsurf {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  IntMat U;
  IntMat V;
  IntVec diagonal;  // length min(rows, cols), nonnegative
};

SmithForm smith_normal_form(const IntMat& a, std::size_t cols);

IntMat identity_matrix(std::size_t n);
IntVec mat_vec(const IntMat& m, const IntVec& v);   // m v
IntVec vec_mat(const IntVec& v, const IntMat& m);   // v m
IntMat mat_mul(const IntMat& a, const IntMat& b);

// Z^n modulo the row span of the relations.
class QuotientGroup {
 public:
  QuotientGroup(std::size_t n, const IntMat& relations);

  std::size_t ambient_rank() const { return n_; }
  // Canonical coordinates: torsion parts reduced mod their factor, free parts as is.
  IntVec canonical(const IntVec& v) const;
  bool is_zero(const IntVec& v) const;
  // 0 means infinite order.
  std::int64_t order(const IntVec& v) const;
  // l with v = l g, reduced mod order(g) when that is finite.
  std::optional<std::int64_t> multiple_of(const IntVec& v, const IntVec& g) const;

 private:
  std::size_t n_;
  IntMat V_;
  IntVec factors_;  // per coordinate: 0 free, 1 trivial, d > 1 cyclic of order d
};

}  // namespace ellsurf
