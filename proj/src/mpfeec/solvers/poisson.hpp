// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_POISSON_HPP
#define MPFEEC_SOLVERS_POISSON_HPP

#include "mpfeec/derham/project.hpp"
#include "mpfeec/solvers/config.hpp"
#include "mpfeec/solvers/discretization.hpp"

namespace mpfeec {

struct PoissonResult {
  FemField phi;
  double relative_residual = 0.0;
  double jump_seminorm = 0.0;
  double l2_error = -1.0;     // filled when an exact solution is supplied
  double relative_error = -1.0;
};

/// Homogeneous-Dirichlet Poisson problem:
///   ((G P0)^T M1 (G P0) + alpha (I-P0)^T M0 (I-P0)) phi = P0^T <f, Lambda>
/// with the homogeneous-BC scalar projection P0.
PoissonResult solve_poisson(const Discretization &disc,
                            const ProblemConfig &config, const ScalarField &f,
                            const ScalarField *exact = nullptr);

PoissonResult solve_poisson(const ProblemConfig &config, const ScalarField &f,
                            const ScalarField *exact = nullptr);

} // namespace mpfeec

#endif
