// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_OPERATORS_WEAK_HPP
#define MPFEEC_OPERATORS_WEAK_HPP

#include <memory>

#include "mpfeec/conforming/projection.hpp"
#include "mpfeec/derham/project.hpp"
#include "mpfeec/derham/spaces.hpp"
#include "mpfeec/linalg/factor.hpp"

namespace mpfeec {

/// Weak (adjoint) differential operator: a transposed strong derivative
/// composed with a block-diagonal mass solve,
///   weak div  = -(M0)^{-1} (G P0)^T M1,
///   weak curl = +(M1)^{-1} (C P1)^T M2.
/// The divergence sign follows the adjoint definition of the weak operators;
/// the curl sign is fixed by the duality identity
/// <v, weak_curl w> = <curl P1 v, w>, which the test suite verifies.
class WeakOperator {
public:
  /// diff_proj = G * P0 (or C * P1); mass_out is the mass matrix of the
  /// output space, mass_in the one pairing the input coefficients.
  WeakOperator(SparseMatrix diff_proj, const SparseMatrix &mass_out,
               SparseMatrix mass_in, double sign);

  static WeakOperator divergence(const SparseMatrix &grad,
                                 const SparseMatrix &p0,
                                 const SparseMatrix &m0,
                                 const SparseMatrix &m1);
  static WeakOperator curl(const SparseMatrix &curlmat, const SparseMatrix &p1,
                           const SparseMatrix &m1, const SparseMatrix &m2);

  std::vector<double> apply(const std::vector<double> &u) const;

private:
  SparseMatrix composed_t_; // (diff proj)^T
  SparseMatrix mass_in_;
  std::shared_ptr<SparseFactorization> mass_out_solver_;
  double sign_;
};

/// Filtered projection: coefficients (M^l)^{-1} P^T <v, Lambda>.
FemField filtered_projection(std::shared_ptr<const DeRhamSpaces> spaces,
                             int level, const SparseMatrix &mass,
                             const SparseMatrix &proj, const ScalarField &v);
FemField filtered_projection(std::shared_ptr<const DeRhamSpaces> spaces,
                             const SparseMatrix &mass, const SparseMatrix &proj,
                             const VectorField &v);

/// Jump penalty S = (I - P)^T M (I - P); symmetric PSD with the conforming
/// subspace as kernel.
SparseMatrix jump_stabilization(const SparseMatrix &mass,
                                const SparseMatrix &proj);

} // namespace mpfeec

#endif
