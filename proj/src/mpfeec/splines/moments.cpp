// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/moments.hpp"

#include <iostream>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/splines/bernstein.hpp"
#include "mpfeec/splines/quadrature.hpp"

namespace mpfeec {

DenseMatrix basis_moment_table(const UnivariateSpace &space, int r) {
  const int dim = space.dim();
  DenseMatrix table(r, dim);
  if (r == 0) return table;
  // Integrand is degree p + r - 1 <= 2p per span, exact with p+1 points.
  QuadratureRule quad(space.knotvector().breakpoints(), space.degree() + 1);
  for (int s = 0; s < quad.span_count(); ++s) {
    const auto &xs = quad.points(s);
    const auto &ws = quad.weights(s);
    for (std::size_t q = 0; q < xs.size(); ++q) {
      const std::vector<double> poly = bernstein_basis(r, xs[q]);
      const BasisSpan bs = space.eval_basis(xs[q]);
      for (int j = 0; j < r; ++j) {
        const double f = ws[q] * poly[j];
        for (std::size_t k = 0; k < bs.values.size(); ++k)
          table(j, bs.first + static_cast<int>(k)) += f * bs.values[k];
      }
    }
  }
  return table;
}

MomentSystem moment_system(const UnivariateSpace &space, int r) {
  MPFEEC_REQUIRE(r >= 0, "moment order must be nonnegative");
  MPFEEC_REQUIRE(r <= space.degree() + 1,
                 "moment order exceeds degree + 1");
  MomentSystem sys;
  sys.order = r;
  if (r == 0) return sys;
  MPFEEC_REQUIRE(r < space.dim() - 1,
                 "moment order too large for this resolution");

  const DenseMatrix table = basis_moment_table(space, r);
  sys.duality = DenseMatrix(r, r);
  sys.vertex_moments.resize(r);
  for (int j = 0; j < r; ++j) {
    sys.vertex_moments[j] = table(j, 0);
    for (int m = 1; m <= r; ++m) sys.duality(j, m - 1) = table(j, m);
  }
  sys.gamma = dense_solve(sys.duality, sys.vertex_moments,
                          &sys.condition_estimate);
  if (sys.condition_estimate > 1e8)
    std::cerr << "[mpfeec] warning: moment duality matrix condition estimate "
              << sys.condition_estimate << " exceeds 1e8 (r=" << r << ")\n";
  return sys;
}

} // namespace mpfeec
