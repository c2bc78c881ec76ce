// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_EIGENSOLVE_HPP
#define MPFEEC_SOLVERS_EIGENSOLVE_HPP

#include "mpfeec/linalg/eigs.hpp"
#include "mpfeec/solvers/config.hpp"
#include "mpfeec/solvers/discretization.hpp"

namespace mpfeec {

struct CurlCurlEigResult {
  EigenResult eig;
  double sigma = 0.0;
  index_t dim = 0;
};

/// Generalized curl-curl eigenproblem with homogeneous tangential boundary:
///   (C P1)^T M2 (C P1) e = lambda (alpha (I-P1)^T M1 (I-P1) + P1^T M1 P1) e,
/// solved by shift-invert Lanczos around config.eig_sigma with the zero modes
/// filtered out. Returns the eig_count smallest positive eigenvalues.
CurlCurlEigResult solve_curlcurl_eig(const Discretization &disc,
                                     const ProblemConfig &config);
CurlCurlEigResult solve_curlcurl_eig(const ProblemConfig &config);

} // namespace mpfeec

#endif
