#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "ellsurf/numerics.hpp"
#include "ellsurf/theta_spaces.hpp"

namespace ellsurf {

// A_{ijkl} with i, j, k, l in {0, 1}; projective.
struct RatTensor {
  std::array<mpq_class, 16> entries;

  static constexpr std::size_t index(int i, int j, int k, int l) {
    return static_cast<std::size_t>(8 * i + 4 * j + 2 * k + l);
  }
  mpq_class& at(int i, int j, int k, int l) { return entries[index(i, j, k, l)]; }
  const mpq_class& at(int i, int j, int k, int l) const { return entries[index(i, j, k, l)]; }

  static RatTensor random_integer(Rng& rng, int bound = 9);
  bool is_zero() const;
};

bool projectively_equal(const RatTensor& a, const RatTensor& b);

// Slot s of the input becomes slot target[s] of the output.
RatTensor permute_slots(const RatTensor& a, const std::array<int, 4>& target);

// eps^{ie} eps^{jf} A_{[ij][uv]} B_{[ef][gh]} = -eps_{ug} eps_{vh}, with the
// bracketed index pairs placed in the given slots of A and B.
struct Contraction {
  std::array<int, 2> a_contracted;
  std::array<int, 2> a_free;
  std::array<int, 2> b_contracted;
  std::array<int, 2> b_free;
};

// Polynomial (adjugate) solution B of the contraction; degree 3 in A.
RatTensor solve_contraction(const RatTensor& a, const Contraction& c);
// Determinant of the 4x4 matrix inverted by solve_contraction.
mpq_class flattening_det(const RatTensor& a, const Contraction& c);

// slot 1: R_23, slot 2: R_13, slot 3: R_12. Primitive polynomial form.
Contraction r_contraction(int slot);
RatTensor apply_R(const RatTensor& a, int slot);
mpq_class delta(const RatTensor& a, int slot);

// A^{(d+1,d')} and A^{(d,d'+1)} from A^{(d,d')}
RatTensor next_horizontal(const RatTensor& a);
RatTensor next_vertical(const RatTensor& a);  // the map T
RatTensor shift11(const RatTensor& a);

// Tensor of relations x_i y_j = sum C_ij^{mn} y_m x_n, given C[i][j][m][n].
RatTensor tensor_from_relations(const std::array<std::array<std::array<std::array<mpq_class, 2>, 2>, 2>, 2>& c);
// x1y1=y1x1, x1y2=y2x1, x2y1=y1x2, x2y2=y2x2+sign*y1x1
RatTensor weyl_tensor(int sign);
// y_2 -> -y_2 in both the second slot and the y-part of the right side
RatTensor flip_y2(const RatTensor& a);

int iterate_degree(const RatTensor& start, int d, Rng& rng);
// Degree of R_{w_1} o ... o R_{w_k} (letters are R slots).
int word_degree(const RatTensor& start, const std::vector<int>& word, Rng& rng);

using IntMatrix3 = std::array<std::array<long long, 3>, 3>;
IntMatrix3 reflection_matrix(int generator);  // 1, 2, 3
IntMatrix3 word_matrix(const std::vector<int>& word);

struct DegreeEntropy {
  long long degree = 0;
  double entropy = 0.0;
  std::array<long long, 4> char_poly{};  // monic, highest first
  bool zero_entropy = false;             // exact: all roots on the unit circle
};

DegreeEntropy coxeter_degree_entropy(const std::vector<int>& word);

// Complex tensor from four degree-2 theta spaces: L1 (multiplier A1), L2 (A2),
// L1 (x) q and L2 (x) q with q acting by Q on the multiplier.
struct EllipticTensor {
  std::array<cplx, 16> a;        // A_{ijkl}
  Eigen::Matrix4cd relation;     // u_a v_b = sum M(ab, cd) u'_c v'_d
  double residual = 0.0;
};

struct EllipticData {
  cplx p;
  ThetaSpace l1;        // u
  ThetaSpace l2_q;      // v
  ThetaSpace l1_q;      // u'
  ThetaSpace l2;        // v'
};

EllipticData random_elliptic_data(const NumericParams& params, cplx a1, cplx a2, cplx q_factor, Rng& rng);
EllipticTensor elliptic_tensor(const EllipticData& data, Rng& rng);
// The same data with L1 replaced by L1 (x) q: the new L1 (x) q basis is the old
// L1 basis translated by q.
EllipticData shift_first_bundle(const EllipticData& data, cplx q_factor);

// Complex versions of the contraction maps for numeric tensors.
std::array<cplx, 16> solve_contraction(const std::array<cplx, 16>& a, const Contraction& c);
std::array<cplx, 16> next_vertical(const std::array<cplx, 16>& a);
double projective_distance(const std::array<cplx, 16>& a, const std::array<cplx, 16>& b);

// |det| of the 2x2 reshaping relative to the norms; zero for decomposable vectors.
double decomposability_residual(const Eigen::Vector4cd& v);

}  // namespace ellsurf
