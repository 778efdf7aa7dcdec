// AVX2/FMA variants.  Only the functions below are compiled for AVX2 (via
// the target attribute); the rest of the library stays baseline x86-64.

#include <cmath>

#include "singtuple/kernels.h"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace singtuple::kernels::detail {

namespace {

__attribute__((target("avx2,fma"))) inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

__attribute__((target("avx2,fma"))) void matvec_avx2(
    const ComplexMatrixView& a, const double* x_re, const double* x_im,
    double* y_re, double* y_im) {
  const std::size_t vec_end = a.cols & ~std::size_t{3};
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* row_re = a.re + i * a.cols;
    const double* row_im = a.im + i * a.cols;
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j < vec_end; j += 4) {
      const __m256d ar = _mm256_loadu_pd(row_re + j);
      const __m256d ai = _mm256_loadu_pd(row_im + j);
      const __m256d xr = _mm256_loadu_pd(x_re + j);
      const __m256d xi = _mm256_loadu_pd(x_im + j);
      acc_re = _mm256_fmadd_pd(ar, xr, acc_re);
      acc_re = _mm256_fnmadd_pd(ai, xi, acc_re);
      acc_im = _mm256_fmadd_pd(ar, xi, acc_im);
      acc_im = _mm256_fmadd_pd(ai, xr, acc_im);
    }
    double sum_re = hsum(acc_re);
    double sum_im = hsum(acc_im);
    for (; j < a.cols; ++j) {
      sum_re += row_re[j] * x_re[j] - row_im[j] * x_im[j];
      sum_im += row_re[j] * x_im[j] + row_im[j] * x_re[j];
    }
    y_re[i] = sum_re;
    y_im[i] = sum_im;
  }
}

__attribute__((target("avx2,fma"))) double max_abs_avx2(const double* re,
                                                        const double* im,
                                                        std::size_t n) {
  const std::size_t vec_end = n & ~std::size_t{3};
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < vec_end; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    best = _mm256_max_pd(best, _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]),
                         std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) out = std::fmax(out, re[i] * re[i] + im[i] * im[i]);
  return std::sqrt(out);
}

}  // namespace singtuple::kernels::detail

#endif
