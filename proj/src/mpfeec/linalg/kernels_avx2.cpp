// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA variants of the vector kernels. This translation unit is compiled
// with -mavx2 -mfma; it must only be entered after the CPUID check in
// kernels.cpp.

#include "mpfeec/linalg/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace mpfeec::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double *x, const double *y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double a, const double *x, double *y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double *x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

double nrm2_sq_avx2(const double *x, std::size_t n) { return dot_avx2(x, x, n); }

double csr_row_dot_avx2(const double *vals, const std::int64_t *cols,
                        std::size_t nnz, const double *x) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= nnz; k += 4) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(cols + k));
    __m256d xv = _mm256_i64gather_pd(x, idx, 8);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(vals + k), xv, acc);
  }
  double s = hsum(acc);
  for (; k < nnz; ++k) s += vals[k] * x[cols[k]];
  return s;
}

} // namespace

namespace detail {
const Ops &avx2_ops_impl() {
  static const Ops ops = {dot_avx2,     axpy_avx2,        scale_avx2,
                          nrm2_sq_avx2, csr_row_dot_avx2, "avx2"};
  return ops;
}
} // namespace detail

} // namespace mpfeec::kernels

#else

namespace mpfeec::kernels::detail {
const Ops &avx2_ops_impl() { return scalar_ops(); }
} // namespace mpfeec::kernels::detail

#endif
