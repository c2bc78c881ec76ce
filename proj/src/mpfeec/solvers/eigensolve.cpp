// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/solvers/eigensolve.hpp"

#include "mpfeec/core/errors.hpp"
#include "mpfeec/operators/weak.hpp"

namespace mpfeec {

CurlCurlEigResult solve_curlcurl_eig(const Discretization &disc,
                                     const ProblemConfig &config) {
  MPFEEC_REQUIRE(config.alpha > 0.0, "jump stabilization needs alpha > 0");
  MPFEEC_REQUIRE(config.bc == BoundaryCondition::Homogeneous,
                 "the eigenproblem imposes homogeneous tangential traces");
  const int r = config.order_for_level(1);
  const ConformingProjection p1 = assemble_conforming_projection(
      disc.spaces, 1, r, BoundaryCondition::Homogeneous);

  const SparseMatrix cp = multiply(disc.curl, p1.matrix);
  const SparseMatrix a = multiply(cp.transpose(), multiply(disc.m2, cp));
  const SparseMatrix pmp =
      multiply(p1.matrix.transpose(), multiply(disc.m1, p1.matrix));
  const SparseMatrix b =
      add(pmp, 1.0, jump_stabilization(disc.m1, p1.matrix), config.alpha);

  CurlCurlEigResult out;
  out.dim = a.rows();
  out.sigma = config.eig_sigma;
  if (out.sigma == 0.0) {
    MPFEEC_REQUIRE(config.domain.name == "square-pi-grid" ||
                       config.domain.name == "checkerboard",
                   "eig_sigma must be given for non-square presets");
    out.sigma = 0.8; // 0.8 x the first analytic eigenvalue of [0,pi]^2
  }

  EigsOptions opts;
  opts.filter_kernel = true;
  opts.drop_near_zero = true;
  opts.seed = config.seed;
  out.eig = generalized_eigs(a, b, config.eig_count, out.sigma, opts);
  return out;
}

CurlCurlEigResult solve_curlcurl_eig(const ProblemConfig &config) {
  return solve_curlcurl_eig(discretize(config.domain, config.degree), config);
}

} // namespace mpfeec
