// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/solvers/poisson.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/linalg/kernels.hpp"
#include "mpfeec/operators/weak.hpp"

namespace mpfeec {

PoissonResult solve_poisson(const Discretization &disc,
                            const ProblemConfig &config, const ScalarField &f,
                            const ScalarField *exact) {
  MPFEEC_REQUIRE(config.alpha > 0.0, "jump stabilization needs alpha > 0");
  MPFEEC_REQUIRE(config.bc == BoundaryCondition::Homogeneous,
                 "the Poisson solver imposes homogeneous boundary conditions");
  const int r = config.order_for_level(0);
  const ConformingProjection p0 = assemble_conforming_projection(
      disc.spaces, 0, r, BoundaryCondition::Homogeneous);

  const SparseMatrix gp = multiply(disc.grad, p0.matrix);
  const SparseMatrix stiff = multiply(gp.transpose(), multiply(disc.m1, gp));
  const SparseMatrix stab = jump_stabilization(disc.m0, p0.matrix);
  const SparseMatrix system = add(stiff, 1.0, stab, config.alpha);

  const std::vector<double> fmom = moment_vector(*disc.spaces, 0, f);
  std::vector<double> rhs(fmom.size());
  p0.matrix.transpose().apply(fmom, rhs);

  SparseFactorization chol(system, SparseFactorization::Kind::SPD);
  PoissonResult out{FemField(0, disc.spaces, chol.solve(rhs)), 0.0, 0.0, -1.0,
                    -1.0};

  const auto &ops = kernels::active_ops();
  {
    std::vector<double> res(rhs.size());
    system.apply(out.phi.coeffs, res);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= rhs[i];
    const double bn = std::sqrt(ops.nrm2_sq(rhs.data(), rhs.size()));
    out.relative_residual =
        bn > 0 ? std::sqrt(ops.nrm2_sq(res.data(), res.size())) / bn : 0.0;
  }
  {
    std::vector<double> sphi(rhs.size());
    stab.apply(out.phi.coeffs, sphi);
    out.jump_seminorm = std::sqrt(std::max(
        0.0, ops.dot(out.phi.coeffs.data(), sphi.data(), sphi.size())));
  }
  if (exact) {
    out.l2_error = l2_error(out.phi, *exact);
    const double nrm = l2_norm(*disc.spaces, *exact);
    out.relative_error = nrm > 0 ? out.l2_error / nrm : out.l2_error;
  }
  return out;
}

PoissonResult solve_poisson(const ProblemConfig &config, const ScalarField &f,
                            const ScalarField *exact) {
  return solve_poisson(discretize(config.domain, config.degree), config, f,
                       exact);
}

} // namespace mpfeec
