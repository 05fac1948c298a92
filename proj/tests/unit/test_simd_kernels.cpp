#include <vector>

#include "doctest.h"
#include "ellsurf/numerics.hpp"
#include "ellsurf/simd/kernels.hpp"

using namespace ellsurf;

namespace {

double max_rel(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]) / std::abs(a[i]));
  return m;
}

}  // namespace

TEST_CASE("active kernels agree with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::vector<const simd::KernelTable*> tables{&simd::active_kernels()};
  if (const auto* avx = simd::avx2_kernels()) tables.push_back(avx);
  Rng rng(5);
  // odd length exercises the remainder loop
  const std::size_t n = 37;
  std::vector<cplx> z(n), a(n), b(n), c(n);
  for (auto& x : z) x = rng.annulus(0.3, 3.0);
  for (auto& x : c) x = rng.gaussian();
  const cplx p = rng.annulus(0.05, 0.5), q = rng.annulus(0.05, 0.5);
  for (const auto* t : tables) {
    CAPTURE(t->name);
    ref.theta_batch(p, z.data(), a.data(), n, kDefaultTruncationEps);
    t->theta_batch(p, z.data(), b.data(), n, kDefaultTruncationEps);
    CHECK(max_rel(a, b) < 1e-13);
    ref.gamma_batch(p, q, z.data(), a.data(), n, kDefaultTruncationEps);
    t->gamma_batch(p, q, z.data(), b.data(), n, kDefaultTruncationEps);
    CHECK(max_rel(a, b) < 1e-13);
    std::vector<cplx> acc1(n, 1.0), acc2(n, 1.0);
    ref.mul_acc(z.data(), c.data(), acc1.data(), n);
    t->mul_acc(z.data(), c.data(), acc2.data(), n);
    CHECK(max_rel(acc1, acc2) < 1e-15);
    const cplx d1 = ref.dot(z.data(), c.data(), n), d2 = t->dot(z.data(), c.data(), n);
    CHECK(std::abs(d1 - d2) < 1e-13 * std::abs(d1));
  }
}

TEST_CASE("scalar kernels match the pointwise functions") {
  const cplx p{0.2, 0.1}, q{0.3, -0.2};
  const std::vector<cplx> z{{0.7, 0.3}, {1.2, -0.5}, {-0.4, 0.9}};
  std::vector<cplx> out(z.size());
  simd::theta_batch(p, z, out, kDefaultTruncationEps);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(out[i] - theta_p(p, z[i])) < 1e-13 * std::abs(out[i]));
  simd::gamma_batch(p, q, z, out, kDefaultTruncationEps);
  for (std::size_t i = 0; i < z.size(); ++i)
    CHECK(std::abs(out[i] - elliptic_gamma(p, q, z[i])) < 1e-13 * std::abs(out[i]));
}

TEST_CASE("empty batches are no-ops") {
  std::vector<cplx> none;
  simd::theta_batch(0.2, none, none, kDefaultTruncationEps);
  CHECK(simd::dot(none, none) == cplx{});
}
