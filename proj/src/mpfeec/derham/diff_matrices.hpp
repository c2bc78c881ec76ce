// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_DERHAM_DIFF_MATRICES_HPP
#define MPFEEC_DERHAM_DIFF_MATRICES_HPP

#include "mpfeec/derham/spaces.hpp"
#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

/// Strong broken gradient in DOF form, N1 x N0, block-diagonal over patches.
/// Each block is the tensorized 1D difference stencil.
SparseMatrix gradient_matrix(const DeRhamSpaces &spaces);

/// Strong broken scalar curl curl(u) = d1 u2 - d2 u1, N2 x N1.
SparseMatrix curl_matrix(const DeRhamSpaces &spaces);

} // namespace mpfeec

#endif
