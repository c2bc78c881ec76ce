// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_SPACE_HPP
#define MPFEEC_SPLINES_SPACE_HPP

#include <span>
#include <vector>

#include "mpfeec/splines/knots.hpp"

namespace mpfeec {

/// Result of evaluating the degree+1 basis functions active at a point.
struct BasisSpan {
  int first = 0;                // index of the first nonzero basis function
  std::vector<double> values;   // degree+1 values
};

/// Univariate clamped B-spline space on [0,1]. The primal (H1-type) space has
/// degree p; its derivative space has degree p-1 on the trimmed knot vector.
class UnivariateSpace {
public:
  UnivariateSpace() = default;
  explicit UnivariateSpace(KnotVector kv) : kv_(std::move(kv)) {}

  const KnotVector &knotvector() const { return kv_; }
  int degree() const { return kv_.degree(); }
  int dim() const { return kv_.num_basis(); }

  /// Nonzero basis values at x via the Cox-de Boor triangle. x must lie in
  /// [0,1].
  BasisSpan eval_basis(double x) const;

  /// All basis values at x (dense, mostly zero).
  std::vector<double> eval_all(double x) const;

  /// Value of the spline with the given coefficients at x.
  double eval(std::span<const double> coeffs, double x) const;

  UnivariateSpace derivative_space() const {
    return UnivariateSpace(kv_.derived());
  }
  UnivariateSpace reversed() const { return UnivariateSpace(kv_.reversed()); }

  bool operator==(const UnivariateSpace &o) const { return kv_ == o.kv_; }

private:
  KnotVector kv_;
};

/// Coefficients of the derivative spline in the derivative space:
/// c1_i = p (c_{i+1} - c_i) / (xi_{i+p+1} - xi_{i+1}).
std::vector<double> derivative_coeffs(const UnivariateSpace &space,
                                      std::span<const double> coeffs);

} // namespace mpfeec

#endif
