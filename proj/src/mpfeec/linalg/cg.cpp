// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/cg.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/kernels.hpp"

namespace mpfeec {

CgResult cg_solve(const SparseMatrix &a, const std::vector<double> &b,
                  double tol, int max_iterations) {
  MPFEEC_REQUIRE(a.rows() == a.cols(), "cg requires a square matrix");
  const std::size_t n = b.size();
  const auto &ops = kernels::active_ops();

  std::vector<double> diag(n, 1.0);
  for (index_t r = 0; r < a.rows(); ++r) {
    const double d = a.coeff(r, r);
    if (d > 0.0) diag[r] = 1.0 / d;
  }

  CgResult res;
  res.x.assign(n, 0.0);
  std::vector<double> r = b;
  std::vector<double> z(n), p(n), q(n);
  const double bnorm = std::sqrt(ops.nrm2_sq(b.data(), n));
  if (bnorm == 0.0) {
    res.converged = true;
    return res;
  }
  for (std::size_t i = 0; i < n; ++i) z[i] = diag[i] * r[i];
  p = z;
  double rz = ops.dot(r.data(), z.data(), n);
  for (int it = 0; it < max_iterations; ++it) {
    a.apply(p, q);
    const double pq = ops.dot(p.data(), q.data(), n);
    if (pq <= 0.0) throw NumericalError("cg: matrix is not positive definite");
    const double alpha = rz / pq;
    ops.axpy(alpha, p.data(), res.x.data(), n);
    ops.axpy(-alpha, q.data(), r.data(), n);
    const double rnorm = std::sqrt(ops.nrm2_sq(r.data(), n));
    res.iterations = it + 1;
    res.relative_residual = rnorm / bnorm;
    if (res.relative_residual <= tol) {
      res.converged = true;
      return res;
    }
    for (std::size_t i = 0; i < n; ++i) z[i] = diag[i] * r[i];
    const double rz_new = ops.dot(r.data(), z.data(), n);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return res;
}

} // namespace mpfeec
