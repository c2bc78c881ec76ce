// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/conforming/trace_ops.hpp"

#include "mpfeec/core/errors.hpp"
#include "mpfeec/splines/knot_insertion.hpp"
#include "mpfeec/splines/mass.hpp"
#include "mpfeec/splines/moments.hpp"

namespace mpfeec {

std::vector<double> end_gamma(const UnivariateSpace &space, int end, int r) {
  if (r == 0) return {};
  const UnivariateSpace s = end == 0 ? space : space.reversed();
  return moment_system(s, r).gamma;
}

DenseMatrix restriction_v0(const UnivariateSpace &coarse,
                           const UnivariateSpace &fine, int r) {
  MPFEEC_REQUIRE(r >= 0 && r <= coarse.degree() + 1,
                 "restriction order must satisfy 0 <= r <= p+1");
  const DenseMatrix e = knot_insertion_matrix(coarse, fine);
  const int nc = coarse.dim() - 1;
  const int nf = fine.dim() - 1;

  // Fine endpoint truncation T: subtracts the coarse endpoint functions so
  // the result vanishes at both ends.
  DenseMatrix t(nf - 1, nf + 1);
  for (int i = 1; i < nf; ++i) {
    t(i - 1, i) = 1.0;
    t(i - 1, 0) = -e(i, 0);
    t(i - 1, nf) = -e(i, nc);
  }

  // Interior L2 projection Rt: Mcc Rt = Mcf restricted to interior fine
  // columns.
  const DenseMatrix mcc = mass_matrix_1d(coarse, coarse);
  const DenseMatrix mcf = mass_matrix_1d(coarse, fine);
  DenseMatrix mcf_int(nc + 1, nf - 1);
  for (int i = 0; i <= nc; ++i)
    for (int j = 1; j < nf; ++j) mcf_int(i, j - 1) = mcf(i, j);
  const DenseMatrix rt = dense_solve(mcc, mcf_int);

  // Coarse truncation Tt: zeroes the endpoint coefficients while moving their
  // moments onto the r nearest interior functions.
  const std::vector<double> gl = end_gamma(coarse, 0, r);
  const std::vector<double> gr = end_gamma(coarse, 1, r);
  DenseMatrix tt(nc - 1, nc + 1);
  for (int i = 1; i < nc; ++i) {
    tt(i - 1, i) = 1.0;
    if (i <= r) tt(i - 1, 0) = gl[i - 1];
    if (nc - i <= r) tt(i - 1, nc) = gr[nc - i - 1];
  }

  const DenseMatrix inner = (tt * rt) * t; // (nc-1) x (nf+1)
  DenseMatrix res(nc + 1, nf + 1);
  res(0, 0) = 1.0;
  res(nc, nf) = 1.0;
  for (int i = 1; i < nc; ++i)
    for (int j = 0; j <= nf; ++j) res(i, j) = inner(i - 1, j);
  return res;
}

DenseMatrix restriction_v1(const UnivariateSpace &coarse1,
                           const UnivariateSpace &fine1) {
  MPFEEC_REQUIRE(coarse1.knotvector().nested_in(fine1.knotvector()),
                 "restriction requires nested trace spaces");
  const DenseMatrix mcc = mass_matrix_1d(coarse1, coarse1);
  const DenseMatrix mcf = mass_matrix_1d(coarse1, fine1);
  return dense_solve(mcc, mcf);
}

InterfaceOperators build_interface_operators(const MultipatchTopology &topo,
                                             const Edge &edge, int r) {
  MPFEEC_REQUIRE(!edge.boundary,
                 "interface operators require an interior edge");
  InterfaceOperators io;
  io.edge_id = edge.id;
  io.order = r;

  const EdgeFrame frame = edge_local_frame(topo, edge);
  const KnotVector &ckv =
      topo.patch_knots(frame.coarse.patch, frame.coarse.par_dir);
  KnotVector fkv = topo.patch_knots(frame.fine.patch, frame.fine.par_dir);
  if (frame.fine.par_reversed) fkv = fkv.reversed();

  io.coarse0 = UnivariateSpace(ckv);
  io.fine0 = UnivariateSpace(fkv);
  io.coarse1 = io.coarse0.derivative_space();
  io.fine1 = io.fine0.derivative_space();

  io.ext0 = knot_insertion_matrix(io.coarse0, io.fine0);
  io.res0 = restriction_v0(io.coarse0, io.fine0, r);
  io.ext1 = knot_insertion_matrix(io.coarse1, io.fine1);
  io.res1 = restriction_v1(io.coarse1, io.fine1);

  const UnivariateSpace perp_c(
      topo.patch_knots(frame.coarse.patch, frame.coarse.perp_dir));
  const UnivariateSpace perp_f(
      topo.patch_knots(frame.fine.patch, frame.fine.perp_dir));
  io.gamma_perp_coarse =
      end_gamma(perp_c, frame.coarse.perp_at_upper_end ? 1 : 0, r);
  io.gamma_perp_fine =
      end_gamma(perp_f, frame.fine.perp_at_upper_end ? 1 : 0, r);

  const int nc = io.coarse0.dim() - 1;
  const int nf = io.fine0.dim() - 1;
  for (int slot = 0; slot < 2; ++slot) {
    io.gamma_par_fine[slot] = end_gamma(io.fine0, slot, r);
    // mu_plus: fine spline vanishing at the vertex with the vertex function's
    // moments; mu_minus transports it to the coarse side.
    std::vector<double> mup(nf + 1, 0.0);
    for (int m = 1; m <= r; ++m) {
      const int idx = slot == 0 ? m : nf - m;
      mup[idx] = io.gamma_par_fine[slot][m - 1];
    }
    std::vector<double> diff = mup;
    diff[slot == 0 ? 0 : nf] -= 1.0;                // mu+ - lambda_vertex
    std::vector<double> mum = io.res0.apply(diff);  // R (mu+ - lambda_v)
    mum[slot == 0 ? 0 : nc] += 1.0;                 // + lambda_vertex_coarse
    io.mu_plus[slot] = std::move(mup);
    io.mu_minus[slot] = std::move(mum);
  }
  return io;
}

} // namespace mpfeec
