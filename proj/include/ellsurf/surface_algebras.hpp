#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellsurf/difference_operators.hpp"
#include "ellsurf/divisor.hpp"
#include "ellsurf/sampled_ops.hpp"
#include "ellsurf/theta_spaces.hpp"

namespace ellsurf {

// Even: generated in degrees f, s, s+f over (eta, eta').
// Odd: generated in degrees f, s, s+f over (eta, x0).
// Blowup: the even or odd algebra (by the divisor basis) with points x1..xm.
enum class SurfaceKind { Even, Odd, Blowup };

// NumericParams.x holds x0 first (ignored by the even algebra), then x1..xm.
// Parameters seen from a source object after translating it to 0.
struct LocalParams {
  cplx eta;
  cplx eta_prime;
  cplx x0;
  std::vector<cplx> points;  // x_i shifted by q^{coefficient of e_i}
};

LocalParams local_params(const NumericParams& params, const DivisorClass& source);

// Random draw with |p| in [0.05, 0.25], |q| in [0.9, 1], generic eta, eta', x_i.
NumericParams random_surface_params(Rng& rng, int m);

// Operators spanning the generators of the given degree at the given source.
std::vector<DiffOp> generator_space(SurfaceKind kind, const NumericParams& params, const DivisorClass& source,
                                    const DivisorClass& step, Rng& rng);

struct HomOptions {
  double tol = kRankTol;
  std::uint64_t seed = 1;
  int max_words = 0;        // 0: four times the expected dimension
  int expected = -1;        // sizing hint; -1 uses the closed formulas
  std::size_t path_budget = 200000;
};

// Basis element i is sum_j combination(i, j) * words[j].
struct HomSpace {
  int dim = 0;
  int order = 0;
  std::vector<OpWord> words;
  MatrixXc combination;

  DiffOp realize(int i) const;
  CoeffSamples sample(int i, std::span<const cplx> points) const;
};

// Closed dimension formulas for generic parameters, -1 when none applies.
int expected_dimension(SurfaceKind kind, const DivisorClass& degree);

HomSpace hom_space_numeric(SurfaceKind kind, const NumericParams& params, const DivisorClass& source,
                           const DivisorClass& target, const HomOptions& opts = {});

// Rank of the sampled span of a list of elements, all of the given order.
int span_rank(std::span<const OpWord> words, int order, cplx p, Rng& rng, double tol = kRankTol, int points = 0);

// Is op in the span of the space (rank does not grow)?
bool in_span(const HomSpace& space, const DiffOp& op, cplx p, Rng& rng, double tol = kRankTol);

// Hom(0, ds+d'f) at eta/eta' = q^l together with Hom(l(s-f), ds+d'f) * lowering_Dl.
int resonant_span_dim(const NumericParams& params, int l, int d, int dp, const HomOptions& opts = {});

// The degree 2s+2f expansion of eta T as a sum of products D_{eta/q}(u_i) D_eta(w_i).
struct CentralExpansion {
  std::vector<ThetaSum> left;   // u_i, multiplier eta eta'/(p^2 q z^4)
  std::vector<ThetaSum> right;  // w_i, multiplier q eta eta'/(p^2 z^4)
  DiffOp op;
  double decomposition_residual = 0.0;
};
CentralExpansion central_T(const NumericParams& params, cplx v, cplx vp, cplx w, Rng& rng);

// Even-algebra words in closed form, for the symmetry functors.
enum class StepType { Fiber, Section, Diagonal };  // degrees f, s, s+f

struct WordStep {
  StepType type;
  ThetaSum fn;  // g, h or b
};

struct GeneratorWord {
  int d = 0;  // source object d s + d' f
  int dp = 0;
  cplx eta;
  cplx eta_prime;
  std::vector<WordStep> steps;  // in order of application
  cplx coefficient{1.0, 0.0};

  DivisorClass source() const;
  DivisorClass target() const;
};

DiffOp realize(const GeneratorWord& word, cplx p, cplx q);
DiffOp realize(std::span<const GeneratorWord> sum, cplx p, cplx q);
// One factor per step; cheaper to sample than the closed-form product.
OpWord factorized(const GeneratorWord& word, cplx p, cplx q);

// Random word along the given steps using generator bases at each object.
GeneratorWord random_word(const NumericParams& params, int d, int dp, std::span<const StepType> steps, Rng& rng);

GeneratorWord fourier_word(const GeneratorWord& word);

// Adjoint of each step over 1/q, in reversed order, with degree tags
// (2 - target, 2 - source).
OpWord adjoint_word(const GeneratorWord& word, cplx p, cplx q);

// Does Hom(Da, Da+Db) * Hom(0, Da) span Hom(0, Da+Db)?
bool surjectivity_check(SurfaceKind kind, const NumericParams& params, const DivisorClass& first,
                        const DivisorClass& second, double tol = kRankTol, std::uint64_t seed = 1);

// Entries D_eta(B_ij) after checking that B_ij has the multiplier of Hom(0, s + d'_j f).
std::vector<std::vector<DiffOp>> equation_operators(const NumericParams& params,
                                                    const std::vector<std::vector<ThetaSum>>& entries,
                                                    const std::vector<int>& fiber_degrees, Rng& rng);

// c_k(z) T^k -> c_k(z^r) T^{rk}; op is built over the nome p^r with shift 1.
DiffOp frobenius_functor(const NumericParams& params, int r, const DiffOp& op);

// Coefficient k of Phi_target^{-1} D Phi_source with
// Phi_{ds+d'f}(z) = Gamma(z/q^{d+1-d'}x0, eta/q^{2d-d'}x0 z); odd algebra, |q| < 1.
cplx elliptic_gauge_coefficient(const NumericParams& params, const DiffOp& op, const DivisorClass& source,
                                const DivisorClass& target, int k, cplx z);

}  // namespace ellsurf
