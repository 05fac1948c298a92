#pragma once

#include <vector>

#include "ellsurf/numerics.hpp"
#include "ellsurf/theta_expr.hpp"

namespace ellsurf {

enum class SpaceKind { Multiplier, Bc1Symmetric };

// Either {f : f(pz) = A z^{-k} f(z)} or the BC1(eta)-symmetric functions of degree d.
struct ThetaSpace {
  SpaceKind kind = SpaceKind::Multiplier;
  cplx multiplier{1.0, 0.0};  // A, for Multiplier
  int degree = 0;             // k or d
  cplx eta{1.0, 0.0};         // for Bc1Symmetric
  cplx p{0.2, 0.0};
  std::vector<ThetaExpr> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // max relative defect of the functional equations over the given points
  double equation_defect(std::span<const cplx> points) const;
};

// Distinct random zero locations; throws IndeterminateRank if the basis is not
// numerically independent at 2k sample points.
ThetaSpace multiplier_space(const NumericParams& params, cplx multiplier, int k, Rng& rng);

// Products of d factors theta_p(z/a, eta/(a z)); d = -1 gives the zero space.
ThetaSpace bc1_symmetric_space(const NumericParams& params, cplx eta, int d, Rng& rng);

// Subspace of a multiplier space vanishing at the given points (generic position).
ThetaSpace multiplier_space_vanishing(const NumericParams& params, cplx multiplier, int k,
                                      std::span<const cplx> zeros, Rng& rng);

// Rank of {f g} evaluated at 2 (dim L1 + dim L2) sample points.
int product_map_rank(const ThetaSpace& l1, const ThetaSpace& l2, Rng& rng, double tol = kRankTol);

// Rows: functions, columns: points.
MatrixXc sample_matrix(std::span<const ThetaExpr> fns, std::span<const cplx> points, cplx p,
                       cplx q = cplx{0.5, 0.0});

}  // namespace ellsurf
