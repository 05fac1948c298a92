#pragma once

#include <span>
#include <vector>

#include "ellsurf/difference_operators.hpp"
#include "ellsurf/numerics.hpp"

namespace ellsurf {

// factors.front() * ... * factors.back(); the back factor acts first.
struct OpWord {
  std::vector<DiffOp> factors;

  int order() const;
};

// Closed-form product; coefficient expressions grow multiplicatively.
DiffOp realize(const OpWord& word);

// samples[k][j] = [T^k] at points[j]
using CoeffSamples = std::vector<std::vector<cplx>>;

CoeffSamples sample_op(const DiffOp& op, std::span<const cplx> points);

// Multiplies left to right, so each factor is only evaluated on the
// q-lattice over the base points and the accumulated product never is.
CoeffSamples sample_word(const OpWord& word, std::span<const cplx> points);

// One row per word: coefficients 0..order at every point, zero-padded.
MatrixXc sample_rows(std::span<const OpWord> words, std::span<const cplx> points, int order);

// Same layout for a single sampled operator.
void write_row(const CoeffSamples& s, int order, MatrixXc& m, Eigen::Index row);

}  // namespace ellsurf
