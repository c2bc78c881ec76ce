// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_EIGS_HPP
#define MPFEEC_LINALG_EIGS_HPP

#include <cstdint>
#include <vector>

#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

struct EigenResult {
  std::vector<double> eigenvalues; // ascending
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residuals; // ||A v - lambda B v|| / ||v||
};

struct EigsOptions {
  int krylov_dim = 0;        // 0 = auto (2k + 30)
  int max_restarts = 60;
  double residual_tol = 1e-9;
  double zero_cutoff = 1e-6; // |lambda| below this is treated as kernel
  bool drop_near_zero = false;
  bool filter_kernel = false; // start vectors premultiplied by B^{-1} A,
                              // removing the pencil's zero modes
  std::uint64_t seed = 0x5eed;
};

/// k eigenpairs of A v = lambda B v nearest the shift sigma, by shift-invert
/// Lanczos on (A - sigma B)^{-1} B with full reorthogonalization in the
/// B-inner product and deflation restarts (recovers multiple eigenvalues).
/// A symmetric PSD, B SPD. Throws NumericalError when the shifted matrix is
/// singular (sigma hits the spectrum) or too few pairs converge.
EigenResult generalized_eigs(const SparseMatrix &a, const SparseMatrix &b,
                             int k, double sigma, EigsOptions opts = {});

/// Dense fallback (oracle path, n <= 600): full spectrum via Eigen, then the
/// k eigenvalues nearest sigma.
EigenResult dense_generalized_eigs(const SparseMatrix &a, const SparseMatrix &b,
                                   int k, double sigma,
                                   bool drop_near_zero = false,
                                   double zero_cutoff = 1e-6);

} // namespace mpfeec

#endif
