// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CONFORMING_VERIFY_HPP
#define MPFEEC_CONFORMING_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mpfeec/conforming/projection.hpp"
#include "mpfeec/derham/spaces.hpp"

namespace mpfeec {

struct CheckItem {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const CheckItem &c : items)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string &name, double measured, double tol) {
    items.push_back({name, measured, tol, measured <= tol});
  }
};

/// A broken field that is conforming by construction (independent of any
/// projection): random coefficients whose traces are unified through knot
/// insertion on every interior edge; boundary traces are zeroed first for the
/// homogeneous variant. level 1 unifies the tangential trace only.
std::vector<double> make_conforming_field(const DeRhamSpaces &spaces, int level,
                                          BoundaryCondition bc,
                                          std::uint64_t seed);

/// Trace mismatch of a coefficient vector across interior edges, sampled at
/// `samples` parameters per edge: value jump for level 0, tangential jump in
/// the shared-edge orientation for level 1. For bc = Homogeneous the boundary
/// trace magnitude is included.
double conformity_error(const DeRhamSpaces &spaces, int level,
                        const std::vector<double> &coeffs,
                        BoundaryCondition bc, int samples = 100);

/// Worst patch-moment change |<(P - I) col, q>| over all columns, patches and
/// tensor test polynomials of order r.
double moment_preservation_error(const DeRhamSpaces &spaces, int level, int r,
                                 const SparseMatrix &proj);

/// Largest deviation from identity among rows whose DOF sits more than r
/// index layers away from every touched interface side.
double locality_error(const DeRhamSpaces &spaces, int level, int r,
                      BoundaryCondition bc, const SparseMatrix &proj);

/// The full property suite from the projection propositions: idempotence,
/// conformity of the range, reproduction of conforming fields, moment
/// preservation, factor-order commutation (bc = None), locality, and metric
/// independence against the variant domain when supplied.
CheckReport verify_projection(const DomainSpec &domain,
                              const DomainSpec *metric_variant, int degree,
                              int level, int r, BoundaryCondition bc,
                              std::uint64_t seed,
                              const SparseMatrix *corrupted = nullptr);

} // namespace mpfeec

#endif
