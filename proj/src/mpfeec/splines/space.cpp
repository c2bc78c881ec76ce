// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/space.hpp"

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

BasisSpan UnivariateSpace::eval_basis(double x) const {
  MPFEEC_REQUIRE(x >= 0.0 && x <= 1.0, "evaluation point outside [0,1]");
  const int p = kv_.degree();
  const auto &t = kv_.knots();
  const int s = kv_.find_span(x);
  BasisSpan out;
  out.first = s - p;
  out.values.assign(p + 1, 0.0);
  out.values[0] = 1.0;
  std::vector<double> left(p + 1), right(p + 1);
  for (int j = 1; j <= p; ++j) {
    left[j] = x - t[s + 1 - j];
    right[j] = t[s + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = out.values[r] / (right[r + 1] + left[j - r]);
      out.values[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    out.values[j] = saved;
  }
  return out;
}

std::vector<double> UnivariateSpace::eval_all(double x) const {
  std::vector<double> vals(dim(), 0.0);
  const BasisSpan bs = eval_basis(x);
  for (std::size_t k = 0; k < bs.values.size(); ++k)
    vals[bs.first + k] = bs.values[k];
  return vals;
}

double UnivariateSpace::eval(std::span<const double> coeffs, double x) const {
  MPFEEC_REQUIRE(static_cast<int>(coeffs.size()) == dim(),
                 "coefficient count does not match space dimension");
  const BasisSpan bs = eval_basis(x);
  double v = 0.0;
  for (std::size_t k = 0; k < bs.values.size(); ++k)
    v += coeffs[bs.first + k] * bs.values[k];
  return v;
}

std::vector<double> derivative_coeffs(const UnivariateSpace &space,
                                      std::span<const double> coeffs) {
  const int p = space.degree();
  MPFEEC_REQUIRE(p >= 1, "derivative requires degree >= 1");
  MPFEEC_REQUIRE(static_cast<int>(coeffs.size()) == space.dim(),
                 "coefficient count does not match space dimension");
  const auto &t = space.knotvector().knots();
  const int n = space.dim() - 1;
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double dt = t[i + p + 1] - t[i + 1];
    out[i] = p * (coeffs[i + 1] - coeffs[i]) / dt;
  }
  return out;
}

} // namespace mpfeec
