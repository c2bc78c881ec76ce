// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_KNOT_INSERTION_HPP
#define MPFEEC_SPLINES_KNOT_INSERTION_HPP

#include "mpfeec/linalg/dense.hpp"
#include "mpfeec/splines/space.hpp"

namespace mpfeec {

/// Change-of-basis matrix E (fine-dim x coarse-dim) expressing each coarse
/// basis function in the fine basis:
///   lambda_coarse_i = sum_j E(j,i) lambda_fine_j.
/// Built by sequential single-knot (Boehm) insertion. Throws GeometryError if
/// the coarse knots are not a sub-multiset of the fine ones.
DenseMatrix knot_insertion_matrix(const UnivariateSpace &coarse,
                                  const UnivariateSpace &fine);

} // namespace mpfeec

#endif
