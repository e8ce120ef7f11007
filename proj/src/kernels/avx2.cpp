#include <immintrin.h>

#include "sectorlab/kernels.hpp"

// Compiled with -mavx2 only; reached through avx2_table() after a CPU check.

namespace sectorlab::kernels {
namespace {

// [ar, ai] * [br, bi] for two packed complex numbers per register, with the
// same operation order as the scalar reference.
inline __m256d mul_packed(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  const __m256d t1 = _mm256_mul_pd(a_re, b);
  const __m256d t2 = _mm256_mul_pd(a_im, b_sw);
  return _mm256_addsub_pd(t1, t2);
}

inline void mul_tail(const cdouble& a, const cdouble& b, cdouble& out) {
  const double ar = a.real(), ai = a.imag();
  const double br = b.real(), bi = b.imag();
  out = cdouble(ar * br - ai * bi, ar * bi + ai * br);
}

void cmul(const cdouble* a, const cdouble* b, cdouble* out, std::size_t n) {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  auto* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(po + 2 * i, mul_packed(va, vb));
  }
  for (; i < n; ++i) mul_tail(a[i], b[i], out[i]);
}

void cscale(cdouble s, const cdouble* x, cdouble* out, std::size_t n) {
  const auto* px = reinterpret_cast<const double*>(x);
  auto* po = reinterpret_cast<double*>(out);
  const __m256d vs = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(po + 2 * i, mul_packed(vs, vx));
  }
  for (; i < n; ++i) mul_tail(s, x[i], out[i]);
}

double sumsq(const cdouble* x, std::size_t n) {
  const auto* px = reinterpret_cast<const double*>(x);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(px + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(px + 2 * i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v0, v0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(v1, v1));
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d v0 = _mm256_loadu_pd(px + 2 * i);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v0, v0));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    total += x[i].real() * x[i].real();
    total += x[i].imag() * x[i].imag();
  }
  return total;
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
  static const KernelTable table{"avx2", &cmul, &cscale, &sumsq};
  return table;
}

}  // namespace sectorlab::kernels
