// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CONFORMING_PROJECTION_HPP
#define MPFEEC_CONFORMING_PROJECTION_HPP

#include <memory>

#include "mpfeec/conforming/trace_ops.hpp"
#include "mpfeec/derham/spaces.hpp"
#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

enum class BoundaryCondition { None, Homogeneous };

/// Conforming projection in DOF form: continuity (level 0) or tangential
/// continuity (level 1) across every interior edge, idempotent, moment
/// preserving of the given order, and metric independent (assembled from
/// knot vectors and topology alone).
struct ConformingProjection {
  int level = 0;
  int order = 0;
  BoundaryCondition bc = BoundaryCondition::None;
  SparseMatrix matrix;
};

/// Stencil factor of one vertex: averages the patch corner DOFs (or zeroes
/// them under homogeneous boundary conditions) and adds the gamma-weighted
/// interior corrections that restore patch moments. Identity away from the
/// vertex. Level 0 only.
SparseMatrix vertex_projection_factor(const DeRhamSpaces &spaces,
                                      const Vertex &vertex, int r,
                                      BoundaryCondition bc);

/// Stencil factor of one edge for the scalar (level 0) projection. Interior
/// edges average the matched traces through the extension/restriction pair
/// and add perpendicular corrections; boundary edges only appear under
/// homogeneous boundary conditions.
SparseMatrix edge_projection_factor_v0(const DeRhamSpaces &spaces,
                                       const Edge &edge,
                                       const InterfaceOperators *io, int r,
                                       BoundaryCondition bc);

/// Stencil factor of one edge for the tangential (level 1) projection. Acts
/// on the edge-tangential component block only.
SparseMatrix edge_projection_factor_v1(const DeRhamSpaces &spaces,
                                       const Edge &edge,
                                       const InterfaceOperators *io, int r,
                                       BoundaryCondition bc);

/// Product of all vertex factors (level 0) followed by all edge factors, in
/// ascending id order. reversed_factor_order flips the order inside each
/// group; within-group factors commute, which the tests assert.
ConformingProjection assemble_conforming_projection(
    std::shared_ptr<const DeRhamSpaces> spaces, int level, int r,
    BoundaryCondition bc, bool reversed_factor_order = false);

} // namespace mpfeec

#endif
