#include <cstdlib>
#include <string_view>

#include "ellsurf/simd/kernels.hpp"

namespace ellsurf::simd {

#if defined(ELLSURF_HAVE_AVX2)
const KernelTable* avx2_table_impl() noexcept;
#endif

const KernelTable* avx2_kernels() noexcept {
#if defined(ELLSURF_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* env = std::getenv("ELLSURF_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* wide = avx2_kernels()) return *wide;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace ellsurf::simd
