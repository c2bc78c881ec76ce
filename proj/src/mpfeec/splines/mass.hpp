// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_MASS_HPP
#define MPFEEC_SPLINES_MASS_HPP

#include "mpfeec/linalg/dense.hpp"
#include "mpfeec/splines/space.hpp"

namespace mpfeec {

/// L2 inner products <row_i, col_j> on [0,1], integrated per span of the
/// merged breakpoint grid so mixed-resolution products stay exact.
DenseMatrix mass_matrix_1d(const UnivariateSpace &rowspace,
                           const UnivariateSpace &colspace);

} // namespace mpfeec

#endif
