#include "doctest.h"
#include "ellsurf/errors.hpp"
#include "ellsurf/theta_spaces.hpp"

using namespace ellsurf;

namespace {

NumericParams base_params() {
  NumericParams p;
  p.p = {0.15, 0.05};
  p.q = {0.6, 0.2};
  return p;
}

}  // namespace

TEST_CASE("multiplier spaces have dimension k") {
  Rng rng(3);
  const auto params = base_params();
  const auto pts = sample_points(rng, params.p, 12);
  for (int k = 1; k <= 5; ++k) {
    const auto space = multiplier_space(params, {0.8, 0.3}, k, rng);
    CHECK(space.dim() == k);
    CHECK(space.equation_defect(pts) < 1e-10);
    const auto m = sample_matrix(space.basis, pts, params.p);
    CHECK(numerical_rank(m).rank == k);
  }
}

TEST_CASE("BC1-symmetric spaces have dimension d+1 and the symmetry") {
  Rng rng(4);
  const auto params = base_params();
  const cplx eta{0.9, -0.4};
  for (int d = 0; d <= 4; ++d) {
    const auto space = bc1_symmetric_space(params, eta, d, rng);
    CHECK(space.dim() == d + 1);
    for (const auto& f : space.basis) {
      const cplx z{0.7, 0.2};
      CHECK(std::abs(f.eval(z, params.p, params.q) - f.eval(eta / z, params.p, params.q)) <
            1e-12 * std::abs(f.eval(z, params.p, params.q)));
    }
    CHECK(space.equation_defect(sample_points(rng, params.p, 8)) < 1e-10);
  }
  CHECK(bc1_symmetric_space(params, eta, -1, rng).dim() == 0);
}

TEST_CASE("vanishing conditions cut the dimension") {
  Rng rng(8);
  const auto params = base_params();
  const std::vector<cplx> zeros{{0.6, 0.1}, {-0.5, 0.7}};
  const auto space = multiplier_space_vanishing(params, {1.1, 0.2}, 4, zeros, rng);
  CHECK(space.dim() == 2);
  for (const auto& f : space.basis)
    for (const auto& z : zeros) CHECK(std::abs(f.eval(z, params.p, params.q)) < 1e-10);
}

TEST_CASE("product map is onto the degree-sum space") {
  Rng rng(9);
  const auto params = base_params();
  const auto a = multiplier_space(params, {0.7, 0.1}, 2, rng);
  const auto b = multiplier_space(params, {1.3, -0.2}, 2, rng);
  // 2 x 2 products span the 4-dimensional space of the product multiplier
  CHECK(product_map_rank(a, b, rng) == 4);
}

TEST_CASE("numerical rank reports a clear gap") {
  MatrixXc m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(numerical_rank(m).rank == 2);
  CHECK(independent_rows(m, 2).size() == 2);
}
