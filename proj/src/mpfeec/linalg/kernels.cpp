// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <cpuid.h>
#endif

namespace mpfeec::kernels {

namespace {

double dot_scalar(const double *x, const double *y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double a, const double *x, double *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double *x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double nrm2_sq_scalar(const double *x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double csr_row_dot_scalar(const double *vals, const std::int64_t *cols,
                          std::size_t nnz, const double *x) {
  double s = 0.0;
  for (std::size_t k = 0; k < nnz; ++k) s += vals[k] * x[cols[k]];
  return s;
}

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  unsigned eax, ebx, ecx, edx;
  if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
  const bool fma = (ecx & bit_FMA) != 0;
  if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
  const bool avx2 = (ebx & bit_AVX2) != 0;
  return avx2 && fma;
#else
  return false;
#endif
}

} // namespace

const Ops &scalar_ops() {
  static const Ops ops = {dot_scalar,     axpy_scalar,        scale_scalar,
                          nrm2_sq_scalar, csr_row_dot_scalar, "scalar"};
  return ops;
}

namespace detail {
// Defined in kernels_avx2.cpp (compiled with -mavx2 -mfma).
const Ops &avx2_ops_impl();
} // namespace detail

const Ops *avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = cpu_has_avx2_fma();
  return ok ? &detail::avx2_ops_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Ops &active_ops() {
  static const Ops &sel = []() -> const Ops & {
    if (const Ops *v = avx2_ops()) return *v;
    return scalar_ops();
  }();
  return sel;
}

} // namespace mpfeec::kernels
