// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_DERHAM_MASS_HPP
#define MPFEEC_DERHAM_MASS_HPP

#include "mpfeec/derham/spaces.hpp"
#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

/// Block-diagonal L2 mass matrix of the broken space at the given level.
/// Integrands carry the pushforward metric factors: J for level 0, the
/// inverse metric tensor times J for level 1, and 1/J for level 2.
/// quad_points = 0 selects degree+1 Gauss points per span.
SparseMatrix mass_matrix(const DeRhamSpaces &spaces, int level,
                         int quad_points = 0);

} // namespace mpfeec

#endif
