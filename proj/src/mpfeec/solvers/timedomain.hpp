// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_TIMEDOMAIN_HPP
#define MPFEEC_SOLVERS_TIMEDOMAIN_HPP

#include <functional>
#include <memory>
#include <optional>

#include "mpfeec/derham/project.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/operators/weak.hpp"
#include "mpfeec/solvers/config.hpp"
#include "mpfeec/solvers/discretization.hpp"

namespace mpfeec {

/// Patches whose closure contains the point, e.g. the pulse-origin region of
/// the reflection diagnostic.
std::vector<int> patches_containing(const MultipatchTopology &topo,
                                    const Vec2 &x);

/// Shared leap-frog machinery: d/dt primary = +(DP)^T M_flux flux-solve,
/// d/dt flux = -(DP) primary, with DP = C P1 / G P0 and the primary variable
/// e / phi carrying the mass solve.
class LeapFrogStepper {
public:
  /// level = 1 builds the Maxwell pair (e in V1, b in V2, DP = C P1);
  /// level = 0 builds the Helmholtz pair (phi in V0, u in V1, DP = G P0).
  LeapFrogStepper(const Discretization &disc, int level, int r,
                  BoundaryCondition bc, double alpha);

  /// One symmetric step: flux half-step, primary full step, flux half-step.
  /// Negative dt steps backward. source, when given, is the projected
  /// stationary source vector P^T <J, Lambda> entering the primary update.
  void step(std::vector<double> &primary, std::vector<double> &flux, double dt,
            const std::vector<double> *source = nullptr) const;

  double energy(const std::vector<double> &primary,
                const std::vector<double> &flux) const;
  double jump_seminorm(const std::vector<double> &primary) const;

  /// Largest generalized eigenvalue of (DP)^T M_flux (DP) against the primary
  /// mass, by power iteration; the stable step is 2/sqrt(lambda_max).
  double lambda_max(std::uint64_t seed, int iterations = 50) const;

  const SparseMatrix &projection() const { return proj_; }
  const SparseMatrix &dp() const { return dp_; }
  std::shared_ptr<const DeRhamSpaces> spaces() const { return spaces_; }
  int level() const { return level_; }

private:
  std::shared_ptr<const DeRhamSpaces> spaces_;
  int level_;
  SparseMatrix proj_;
  SparseMatrix dp_;     // C P1 or G P0
  SparseMatrix dpt_mf_; // (DP)^T M_flux
  SparseMatrix m_primary_, m_flux_, stab_;
  std::shared_ptr<SparseFactorization> primary_solver_;
};

struct TdResult {
  TimeSeries series;
  FemField primary; // e (Maxwell) or phi (Helmholtz)
  FemField flux;    // b (Maxwell) or u (Helmholtz)
};

/// Invoked at every recorded snapshot with the current fields.
using SnapshotCallback = std::function<void(
    const TimeSeries::Snapshot &, const FemField &, const FemField &)>;

/// Leap-frog time-domain Maxwell. J is optional and stationary; the reported
/// diagnostic is the max |E_h| over the pulse-origin patches once the
/// analytic crossing time has passed.
TdResult run_td_maxwell(const Discretization &disc, const ProblemConfig &config,
                        const VectorField &e0, const ScalarField &b0,
                        const VectorField *j = nullptr,
                        const SnapshotCallback &on_snapshot = {});

/// Leap-frog time-domain Helmholtz (phi in V0, u in V1); the diagnostic
/// samples |phi_h|.
TdResult run_td_helmholtz(const Discretization &disc,
                          const ProblemConfig &config, const ScalarField &phi0,
                          const VectorField &u0,
                          const SnapshotCallback &on_snapshot = {});

} // namespace mpfeec

#endif
