// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_KERNELS_HPP
#define MPFEEC_LINALG_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Dense vector and CSR row kernels. Scalar reference implementations live in
// kernels.cpp; an AVX2 variant of each is compiled in kernels_avx2.cpp and
// selected once at startup based on CPUID. Both variants are equivalence-tested
// against each other.

namespace mpfeec::kernels {

struct Ops {
  double (*dot)(const double *x, const double *y, std::size_t n);
  void (*axpy)(double a, const double *x, double *y, std::size_t n);
  void (*scale)(double a, double *x, std::size_t n);
  double (*nrm2_sq)(const double *x, std::size_t n);
  // y[r] = sum_j vals[k] * x[cols[k]] over one CSR row slice.
  double (*csr_row_dot)(const double *vals, const std::int64_t *cols,
                        std::size_t nnz, const double *x);
  const char *name;
};

/// Scalar reference kernels (always available).
const Ops &scalar_ops();

/// AVX2+FMA kernels; null if unsupported on this CPU.
const Ops *avx2_ops();

/// Kernels selected for this process (AVX2 when the CPU has it).
const Ops &active_ops();

} // namespace mpfeec::kernels

#endif
