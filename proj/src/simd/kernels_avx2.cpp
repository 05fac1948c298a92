// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "ellsurf/errors.hpp"
#include "ellsurf/simd/kernels.hpp"
#include "ellsurf/special_functions.hpp"

namespace ellsurf::simd {
namespace {

// Two complex numbers per register, laid out re0 im0 re1 im1.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d broadcast(cplx c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }

inline __m256d load2(const cplx* z) { return _mm256_loadu_pd(reinterpret_cast<const double*>(z)); }

inline void store2(cplx* out, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(out), v); }

inline __m256d abs2(__m256d v) {
  const __m256d sq = _mm256_mul_pd(v, v);
  return _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
}

void theta_batch_avx2(cplx p, const cplx* z, cplx* out, std::size_t n, double eps) {
  const double ap = std::abs(p);
  if (!(ap < 1.0)) throw Error(ErrorKind::NonConvergent, "theta_p requires |p| < 1");
  const __m256d one = _mm256_setr_pd(1.0, 0.0, 1.0, 0.0);
  const __m256d pb = broadcast(p);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (z[i] == cplx{} || z[i + 1] == cplx{}) throw Error(ErrorKind::DomainError, "theta_p at z = 0");
    const int terms = std::max(theta_truncation(ap, std::abs(z[i]), eps),
                               theta_truncation(ap, std::abs(z[i + 1]), eps));
    const cplx inv0 = 1.0 / z[i], inv1 = 1.0 / z[i + 1];
    const __m256d zv = load2(z + i);
    const __m256d zi = _mm256_setr_pd(inv0.real(), inv0.imag(), inv1.real(), inv1.imag());
    __m256d acc = one;
    __m256d pw = one;
    for (int k = 0; k < terms; ++k) {
      const __m256d pn = cmul(pw, pb);
      const __m256d f1 = _mm256_sub_pd(one, cmul(pw, zv));
      const __m256d f2 = _mm256_sub_pd(one, cmul(pn, zi));
      acc = cmul(acc, cmul(f1, f2));
      pw = pn;
    }
    store2(out + i, acc);
  }
  for (; i < n; ++i) out[i] = ellsurf::theta_p(p, z[i], eps);
}

void gamma_batch_avx2(cplx p, cplx q, const cplx* z, cplx* out, std::size_t n, double eps) {
  const double ap = std::abs(p), aq = std::abs(q);
  if (!(ap < 1.0)) throw Error(ErrorKind::NonConvergent, "elliptic_gamma requires |p| < 1");
  if (!(aq < 1.0)) throw Error(ErrorKind::DomainError, "elliptic_gamma requires |q| < 1");
  const cplx pq = p * q;
  const double target = eps * 1e-2 * (1.0 - ap) * (1.0 - aq);
  const __m256d one = _mm256_setr_pd(1.0, 0.0, 1.0, 0.0);
  const __m256d pqb = broadcast(pq);
  const double pole_guard = (eps * 10.0) * (eps * 10.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (z[i] == cplx{} || z[i + 1] == cplx{})
      throw Error(ErrorKind::DomainError, "elliptic_gamma at z = 0");
    double reach = 0.0;
    for (int l = 0; l < 2; ++l) {
      const double az = std::abs(z[i + l]);
      reach = std::max({reach, az, std::abs(pq) / az});
    }
    const cplx inv0 = 1.0 / z[i], inv1 = 1.0 / z[i + 1];
    const __m256d zv = load2(z + i);
    const __m256d zi = cmul(_mm256_setr_pd(inv0.real(), inv0.imag(), inv1.real(), inv1.imag()), pqb);
    __m256d num = one, den = one;
    __m256d dmin = _mm256_set1_pd(1e300);
    cplx pj{1.0, 0.0};
    double apj = 1.0;
    while (apj * reach >= target) {
      cplx pjqk = pj;
      double mag = apj;
      while (mag * reach >= target) {
        const __m256d c = broadcast(pjqk);
        const __m256d d = _mm256_sub_pd(one, cmul(c, zv));
        dmin = _mm256_min_pd(dmin, abs2(d));
        den = cmul(den, d);
        num = cmul(num, _mm256_sub_pd(one, cmul(c, zi)));
        pjqk *= q;
        mag *= aq;
      }
      pj *= p;
      apj *= ap;
    }
    alignas(32) double mins[4];
    _mm256_store_pd(mins, dmin);
    if (mins[0] < pole_guard || mins[2] < pole_guard)
      throw Error(ErrorKind::PoleHit, "elliptic_gamma pole");
    alignas(32) double nb[4], db[4];
    _mm256_store_pd(nb, num);
    _mm256_store_pd(db, den);
    out[i] = cplx{nb[0], nb[1]} / cplx{db[0], db[1]};
    out[i + 1] = cplx{nb[2], nb[3]} / cplx{db[2], db[3]};
  }
  for (; i < n; ++i) out[i] = ellsurf::elliptic_gamma(p, q, z[i], eps);
}

void mul_acc_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(out + i, _mm256_add_pd(load2(out + i), cmul(load2(a + i), load2(b + i))));
  for (; i < n; ++i) out[i] += a[i] * b[i];
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, cmul(load2(a + i), load2(b + i)));
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  cplx sum{buf[0] + buf[2], buf[1] + buf[3]};
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const KernelTable* avx2_table_impl() noexcept {
  static const KernelTable table{"avx2", theta_batch_avx2, gamma_batch_avx2, mul_acc_avx2, dot_avx2};
  return &table;
}

}  // namespace ellsurf::simd
