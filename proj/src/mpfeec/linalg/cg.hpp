// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_CG_HPP
#define MPFEEC_LINALG_CG_HPP

#include <vector>

#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

struct CgResult {
  std::vector<double> x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// Jacobi-preconditioned conjugate gradients. Fallback path behind a flag for
/// SPD systems; the default solver is the direct factorization.
CgResult cg_solve(const SparseMatrix &a, const std::vector<double> &b,
                  double tol = 1e-11, int max_iterations = 10000);

} // namespace mpfeec

#endif
