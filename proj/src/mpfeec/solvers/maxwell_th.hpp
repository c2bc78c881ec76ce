// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_MAXWELL_TH_HPP
#define MPFEEC_SOLVERS_MAXWELL_TH_HPP

#include "mpfeec/derham/project.hpp"
#include "mpfeec/solvers/config.hpp"
#include "mpfeec/solvers/discretization.hpp"

namespace mpfeec {

struct MaxwellThResult {
  FemField e;
  double relative_residual = 0.0;
  double l2_error = -1.0;
  double relative_error = -1.0;
  double curl_error = -1.0; // L2 error of the discrete curl
};

/// Time-harmonic Maxwell without boundary conditions:
///   (-omega^2 P1^T M1 P1 + (C P1)^T M2 C P1 + alpha (I-P1)^T M1 (I-P1)) e
///     = P1^T <J, Lambda>.
/// Symmetric indefinite; omega^2 must stay clear of the discrete spectrum.
MaxwellThResult solve_time_harmonic_maxwell(const Discretization &disc,
                                            const ProblemConfig &config,
                                            const VectorField &j,
                                            const VectorField *exact = nullptr,
                                            const ScalarField *exact_curl = nullptr);

MaxwellThResult solve_time_harmonic_maxwell(const ProblemConfig &config,
                                            const VectorField &j,
                                            const VectorField *exact = nullptr,
                                            const ScalarField *exact_curl = nullptr);

} // namespace mpfeec

#endif
