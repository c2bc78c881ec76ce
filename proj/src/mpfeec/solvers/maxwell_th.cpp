// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/solvers/maxwell_th.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/linalg/kernels.hpp"
#include "mpfeec/operators/weak.hpp"

namespace mpfeec {

MaxwellThResult solve_time_harmonic_maxwell(const Discretization &disc,
                                            const ProblemConfig &config,
                                            const VectorField &j,
                                            const VectorField *exact,
                                            const ScalarField *exact_curl) {
  MPFEEC_REQUIRE(config.alpha > 0.0, "jump stabilization needs alpha > 0");
  const int r = config.order_for_level(1);
  const ConformingProjection p1 =
      assemble_conforming_projection(disc.spaces, 1, r, config.bc);

  const SparseMatrix cp = multiply(disc.curl, p1.matrix);
  const SparseMatrix curlcurl = multiply(cp.transpose(), multiply(disc.m2, cp));
  const SparseMatrix pmp =
      multiply(p1.matrix.transpose(), multiply(disc.m1, p1.matrix));
  const SparseMatrix stab = jump_stabilization(disc.m1, p1.matrix);
  SparseMatrix system = add(curlcurl, 1.0, pmp, -config.omega * config.omega);
  system = add(system, 1.0, stab, config.alpha);

  const std::vector<double> jm = moment_vector(*disc.spaces, j);
  std::vector<double> rhs(jm.size());
  p1.matrix.transpose().apply(jm, rhs);

  MaxwellThResult out;
  try {
    SparseFactorization lu(system, SparseFactorization::Kind::General);
    out.e = FemField(1, disc.spaces, lu.solve(rhs, 1e-10));
  } catch (const NumericalError &) {
    throw NumericalError("time-harmonic solve failed: omega^2 appears to "
                         "collide with a discrete eigenvalue");
  }

  const auto &ops = kernels::active_ops();
  {
    std::vector<double> res(rhs.size());
    system.apply(out.e.coeffs, res);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= rhs[i];
    const double bn = std::sqrt(ops.nrm2_sq(rhs.data(), rhs.size()));
    out.relative_residual =
        bn > 0 ? std::sqrt(ops.nrm2_sq(res.data(), res.size())) / bn : 0.0;
  }
  if (exact) {
    out.l2_error = l2_error(out.e, *exact);
    const double nrm = l2_norm(*disc.spaces, *exact);
    out.relative_error = nrm > 0 ? out.l2_error / nrm : out.l2_error;
  }
  if (exact_curl) {
    std::vector<double> ce(disc.curl.rows());
    const std::vector<double> pe = p1.matrix * out.e.coeffs;
    disc.curl.apply(pe, ce);
    out.curl_error = l2_error(FemField(2, disc.spaces, ce), *exact_curl);
  }
  return out;
}

MaxwellThResult solve_time_harmonic_maxwell(const ProblemConfig &config,
                                            const VectorField &j,
                                            const VectorField *exact,
                                            const ScalarField *exact_curl) {
  return solve_time_harmonic_maxwell(discretize(config.domain, config.degree),
                                     config, j, exact, exact_curl);
}

} // namespace mpfeec
