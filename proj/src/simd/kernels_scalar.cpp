#include <algorithm>
#include <cmath>

#include "ellsurf/simd/kernels.hpp"
#include "ellsurf/special_functions.hpp"

namespace ellsurf::simd {
namespace {

void theta_batch_scalar(cplx p, const cplx* z, cplx* out, std::size_t n, double eps) {
  for (std::size_t i = 0; i < n; ++i) out[i] = ellsurf::theta_p(p, z[i], eps);
}

void gamma_batch_scalar(cplx p, cplx q, const cplx* z, cplx* out, std::size_t n, double eps) {
  for (std::size_t i = 0; i < n; ++i) out[i] = ellsurf::elliptic_gamma(p, q, z[i], eps);
}

void mul_acc_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar", theta_batch_scalar, gamma_batch_scalar, mul_acc_scalar,
                                 dot_scalar};
  return table;
}

}  // namespace ellsurf::simd
