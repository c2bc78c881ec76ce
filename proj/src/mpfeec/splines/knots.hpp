// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_KNOTS_HPP
#define MPFEEC_SPLINES_KNOTS_HPP

#include <vector>

namespace mpfeec {

/// Clamped (open) knot vector on [0,1]: the first and last knot repeat
/// degree+1 times, interior knots are the strictly increasing breakpoints.
class KnotVector {
public:
  KnotVector() = default;

  /// Open knot vector from strictly increasing breakpoints spanning [0,1].
  static KnotVector from_breakpoints(int degree,
                                     const std::vector<double> &breakpoints);
  /// Uniform breakpoints with `cells` spans.
  static KnotVector uniform(int degree, int cells);

  int degree() const { return degree_; }
  const std::vector<double> &knots() const { return knots_; }
  const std::vector<double> &breakpoints() const { return breaks_; }
  int cell_count() const { return static_cast<int>(breaks_.size()) - 1; }
  /// Number of B-spline basis functions (n+1 in the usual indexing).
  int num_basis() const { return static_cast<int>(knots_.size()) - degree_ - 1; }

  double greville(int i) const;

  /// Index of the knot span containing x (right-closed at x = 1).
  int find_span(double x) const;

  /// Knot vector of the derivative space: degree-1, first and last knot
  /// dropped.
  KnotVector derived() const;

  /// The knot vector of the parameter-reversed space t -> 1 - t.
  KnotVector reversed() const;

  /// Split every cell into `factor` equal parts.
  KnotVector refined(int factor) const;

  /// True if this knot vector is a sub-multiset of `fine` with equal degree.
  bool nested_in(const KnotVector &fine) const;

  bool operator==(const KnotVector &other) const {
    return degree_ == other.degree_ && knots_ == other.knots_;
  }

private:
  int degree_ = 0;
  std::vector<double> knots_;
  std::vector<double> breaks_;
};

} // namespace mpfeec

#endif
