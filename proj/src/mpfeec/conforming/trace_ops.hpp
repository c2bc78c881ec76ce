// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CONFORMING_TRACE_OPS_HPP
#define MPFEEC_CONFORMING_TRACE_OPS_HPP

#include "mpfeec/geometry/topology.hpp"
#include "mpfeec/linalg/dense.hpp"
#include "mpfeec/splines/space.hpp"

namespace mpfeec {

/// Moment-preserving restriction from a fine primal trace space onto a nested
/// coarse one. The matrix is the bordered form
///   R = [ e_0^T ; R0 T ; e_n^T ],   R0 = Tt Rt,
/// with T the fine endpoint truncation, Rt the interior L2 projection and Tt
/// the gamma-weighted coarse truncation, so that R E = I, endpoint
/// coefficients are preserved exactly, and moments against polynomials of
/// degree < r are preserved on every input.
DenseMatrix restriction_v0(const UnivariateSpace &coarse,
                           const UnivariateSpace &fine, int r);

/// Restriction between derived (degree p-1) trace spaces: the plain L2
/// projection R1 = Mcc^{-1} Mcf, moment preserving up to the full degree.
DenseMatrix restriction_v1(const UnivariateSpace &coarse1,
                           const UnivariateSpace &fine1);

/// Everything one interior edge needs: canonical (coarse-oriented) trace
/// spaces of both sides, extension/restriction matrices for the primal and
/// derived traces, the perpendicular correction weights of both patches, and
/// the vertex splines mu that carry endpoint moments into the edge interior.
struct InterfaceOperators {
  int edge_id = -1;
  int order = 0; // r
  UnivariateSpace coarse0, fine0; // canonical primal trace spaces
  UnivariateSpace coarse1, fine1; // derived trace spaces
  DenseMatrix ext0, res0; // E0: (nf+1) x (nc+1), R0: (nc+1) x (nf+1)
  DenseMatrix ext1, res1; // E1: nf x nc,         R1: nc x nf
  std::vector<double> gamma_perp_coarse, gamma_perp_fine; // size r
  // Parallel-direction correction weights of the canonical trace spaces at
  // both edge ends (slot 0: t=0, slot 1: t=1).
  std::array<std::vector<double>, 2> gamma_par_fine;
  std::array<std::vector<double>, 2> mu_plus;  // fine coefficients
  std::array<std::vector<double>, 2> mu_minus; // coarse coefficients
};

InterfaceOperators build_interface_operators(const MultipatchTopology &topo,
                                             const Edge &edge, int r);

/// gamma of the space itself (end = 0) or of its parameter reversal (end = 1),
/// i.e. the correction weights attached to the basis functions nearest that
/// endpoint.
std::vector<double> end_gamma(const UnivariateSpace &space, int end, int r);

} // namespace mpfeec

#endif
