// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_CONFIG_HPP
#define MPFEEC_SOLVERS_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "mpfeec/conforming/projection.hpp"
#include "mpfeec/geometry/topology.hpp"

namespace mpfeec {

struct ProblemConfig {
  DomainSpec domain;
  int degree = 3;
  int moment_order = -1; // -1 selects the maximal admissible order
  BoundaryCondition bc = BoundaryCondition::Homogeneous;
  double alpha = 1.0; // jump stabilization weight, > 0
  double omega = 1.0; // time-harmonic frequency

  // time-domain
  double dt = 0.0; // 0 derives dt from the CFL fraction
  double cfl_fraction = 0.5;
  double t_max = 0.0; // 0 derives t_max from the diagnostic time
  int snapshot_stride = 10;
  Vec2 pulse_center{M_PI / 2, M_PI / 2};
  double pulse_sigma = 0.1;

  // eigenproblem
  int eig_count = 8;
  double eig_sigma = 0.0; // 0 selects the square-domain default

  std::uint64_t seed = 12345;

  /// Maximal admissible moment order at a level: p+1 for the scalar
  /// projection, p for the tangential one.
  int order_for_level(int level) const {
    if (moment_order >= 0) return moment_order;
    return level == 0 ? degree + 1 : degree;
  }
};

struct TimeSeries {
  struct Snapshot {
    int step;
    double time;
    double energy;
    double jump_norm;
    double diag_amplitude; // max |field| over the diagnostic region
  };
  std::vector<Snapshot> snapshots;
  double dt = 0.0;
  int steps = 0;
  double lambda_max = 0.0;  // CFL estimate
  double diag_time = 0.0;   // when the reflection diagnostic is read off
  double diag_value = -1.0; // amplitude at the first snapshot past diag_time
};

} // namespace mpfeec

#endif
