// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_DERHAM_PROJECT_HPP
#define MPFEEC_DERHAM_PROJECT_HPP

#include <functional>

#include "mpfeec/derham/spaces.hpp"

namespace mpfeec {

using ScalarField = std::function<double(double, double)>;
using VectorField = std::function<Vec2(double, double)>;

/// Moment vector f_i = <v, Lambda_i> over the physical domain, assembled by
/// per-span Gauss quadrature on the logical patches (degree+2 points by
/// default). For level 1 the integrand uses the pulled-back field DF^{-1} v.
std::vector<double> moment_vector(const DeRhamSpaces &spaces, int level,
                                  const ScalarField &v, int quad_points = 0);
std::vector<double> moment_vector(const DeRhamSpaces &spaces,
                                  const VectorField &v, int quad_points = 0);

/// Patchwise L2 projection Q onto the broken space: coefficients solve
/// M c = <v, Lambda>.
FemField l2_project_broken(std::shared_ptr<const DeRhamSpaces> spaces,
                           int level, const ScalarField &v);
FemField l2_project_broken(std::shared_ptr<const DeRhamSpaces> spaces,
                           const VectorField &v);

/// L2 errors against an exact field, integrated with degree+3 points.
double l2_error(const FemField &field, const ScalarField &exact);
double l2_error(const FemField &field, const VectorField &exact);
double l2_norm(const DeRhamSpaces &spaces, const ScalarField &f);
double l2_norm(const DeRhamSpaces &spaces, const VectorField &f);

} // namespace mpfeec

#endif
