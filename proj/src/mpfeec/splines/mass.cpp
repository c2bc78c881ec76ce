// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/mass.hpp"

#include <algorithm>
#include <cmath>

#include "mpfeec/splines/quadrature.hpp"

namespace mpfeec {

DenseMatrix mass_matrix_1d(const UnivariateSpace &rowspace,
                           const UnivariateSpace &colspace) {
  std::vector<double> breaks;
  {
    const auto &a = rowspace.knotvector().breakpoints();
    const auto &b = colspace.knotvector().breakpoints();
    breaks.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(breaks));
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double x, double y) { return std::abs(x - y) <= 1e-13; }),
                 breaks.end());
  }
  const int npts = std::max(rowspace.degree(), colspace.degree()) + 1;
  QuadratureRule quad(breaks, npts);

  DenseMatrix m(rowspace.dim(), colspace.dim());
  for (int s = 0; s < quad.span_count(); ++s) {
    const auto &xs = quad.points(s);
    const auto &ws = quad.weights(s);
    for (std::size_t q = 0; q < xs.size(); ++q) {
      const BasisSpan br = rowspace.eval_basis(xs[q]);
      const BasisSpan bc = colspace.eval_basis(xs[q]);
      for (std::size_t a = 0; a < br.values.size(); ++a)
        for (std::size_t b = 0; b < bc.values.size(); ++b)
          m(br.first + static_cast<int>(a), bc.first + static_cast<int>(b)) +=
              ws[q] * br.values[a] * bc.values[b];
    }
  }
  return m;
}

} // namespace mpfeec
