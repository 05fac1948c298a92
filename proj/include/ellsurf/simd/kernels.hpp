#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace ellsurf::simd {

using cplx = std::complex<double>;

// Batched inner loops. Every variant must agree with the scalar table to
// within a few ulps of the truncation error.
struct KernelTable {
  std::string_view name;
  // out[i] = theta_p(z[i]); all z must be nonzero and |p| < 1
  void (*theta_batch)(cplx p, const cplx* z, cplx* out, std::size_t n, double eps);
  // out[i] = Gamma_{p,q}(z[i]); |p|, |q| < 1
  void (*gamma_batch)(cplx p, cplx q, const cplx* z, cplx* out, std::size_t n, double eps);
  // out[i] += a[i] * b[i]
  void (*mul_acc)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  // sum_i a[i] * b[i]
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the build or the running CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels() noexcept;

// Chosen once per process; ELLSURF_SIMD=scalar forces the reference path.
const KernelTable& active_kernels() noexcept;

inline void theta_batch(cplx p, std::span<const cplx> z, std::span<cplx> out, double eps) {
  active_kernels().theta_batch(p, z.data(), out.data(), z.size(), eps);
}

inline void gamma_batch(cplx p, cplx q, std::span<const cplx> z, std::span<cplx> out, double eps) {
  active_kernels().gamma_batch(p, q, z.data(), out.data(), z.size(), eps);
}

inline void mul_acc(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  active_kernels().mul_acc(a.data(), b.data(), out.data(), out.size());
}

inline cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  return active_kernels().dot(a.data(), b.data(), a.size());
}

}  // namespace ellsurf::simd
