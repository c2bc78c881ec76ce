// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_MOMENTS_HPP
#define MPFEEC_SPLINES_MOMENTS_HPP

#include <vector>

#include "mpfeec/linalg/dense.hpp"
#include "mpfeec/splines/space.hpp"

namespace mpfeec {

/// Duality system between the first r interior basis functions and the
/// Bernstein test polynomials. gamma are the interior correction weights
/// that reproduce the moments of the first (vertex) basis function:
/// sum_m gamma_m <lambda_m, q_j> = <lambda_0, q_j> for all j.
struct MomentSystem {
  int order = 0;            // r
  DenseMatrix duality;      // r x r, entry (j-1, m-1) = <q_j, lambda_m>
  std::vector<double> vertex_moments; // r, <q_j, lambda_0>
  std::vector<double> gamma;          // r, solves duality * gamma = vertex
  double condition_estimate = 0.0;
};

/// Build the moment system of order r for a primal-type space. Requires
/// r <= degree+1 and r < dim-1 so the corrections stay clear of the opposite
/// endpoint. For r = 0 every field is empty.
MomentSystem moment_system(const UnivariateSpace &space, int r);

/// Moments of every basis function against the Bernstein polynomials:
/// entry (j-1, i) = integral of q_j * lambda_i. Shape r x dim.
DenseMatrix basis_moment_table(const UnivariateSpace &space, int r);

} // namespace mpfeec

#endif
