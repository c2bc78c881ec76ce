// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_QUADRATURE_HPP
#define MPFEEC_SPLINES_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace mpfeec {

/// Gauss-Legendre nodes and weights on [-1,1], computed once per order by
/// Newton iteration on the Legendre recurrence.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule &gauss_legendre(int npoints);

/// Per-breakpoint-span Gauss points in global [0,1] coordinates. With p+1
/// points per span the rule is exact for piecewise polynomials of degree
/// 2p+1 on the spans.
class QuadratureRule {
public:
  QuadratureRule() = default;
  QuadratureRule(const std::vector<double> &breakpoints, int points_per_span);

  int span_count() const { return static_cast<int>(spans_.size()); }
  int points_per_span() const { return pps_; }
  const std::vector<double> &points(int span) const { return spans_[span].x; }
  const std::vector<double> &weights(int span) const { return spans_[span].w; }

  double integrate(const std::function<double(double)> &f) const;

private:
  struct Span {
    std::vector<double> x, w;
  };
  std::vector<Span> spans_;
  int pps_ = 0;
};

} // namespace mpfeec

#endif
