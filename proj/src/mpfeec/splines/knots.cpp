// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/knots.hpp"

#include <algorithm>
#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

KnotVector KnotVector::from_breakpoints(int degree,
                                        const std::vector<double> &breakpoints) {
  MPFEEC_REQUIRE(degree >= 0, "degree must be nonnegative");
  MPFEEC_REQUIRE(breakpoints.size() >= 2, "need at least two breakpoints");
  MPFEEC_REQUIRE(breakpoints.front() == 0.0 && breakpoints.back() == 1.0,
                 "breakpoints must span [0,1]");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    MPFEEC_REQUIRE(breakpoints[i] > breakpoints[i - 1],
                   "breakpoints must be strictly increasing");
  KnotVector kv;
  kv.degree_ = degree;
  kv.breaks_ = breakpoints;
  kv.knots_.assign(degree + 1, 0.0);
  kv.knots_.insert(kv.knots_.end(), breakpoints.begin() + 1, breakpoints.end() - 1);
  kv.knots_.insert(kv.knots_.end(), degree + 1, 1.0);
  return kv;
}

KnotVector KnotVector::uniform(int degree, int cells) {
  MPFEEC_REQUIRE(cells >= 1, "need at least one cell");
  std::vector<double> breaks(cells + 1);
  for (int i = 0; i <= cells; ++i) breaks[i] = static_cast<double>(i) / cells;
  breaks.front() = 0.0;
  breaks.back() = 1.0;
  return from_breakpoints(degree, breaks);
}

double KnotVector::greville(int i) const {
  double s = 0.0;
  for (int k = 1; k <= degree_; ++k) s += knots_[i + k];
  return degree_ > 0 ? s / degree_ : 0.5 * (knots_[i] + knots_[i + 1]);
}

int KnotVector::find_span(double x) const {
  const int n = num_basis() - 1;
  if (x >= 1.0) return n;
  if (x <= 0.0) return degree_;
  int lo = degree_, hi = n + 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (knots_[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

KnotVector KnotVector::derived() const {
  MPFEEC_REQUIRE(degree_ >= 1, "derivative space needs degree >= 1");
  KnotVector kv;
  kv.degree_ = degree_ - 1;
  kv.knots_.assign(knots_.begin() + 1, knots_.end() - 1);
  kv.breaks_ = breaks_;
  return kv;
}

KnotVector KnotVector::reversed() const {
  KnotVector kv;
  kv.degree_ = degree_;
  kv.knots_.resize(knots_.size());
  for (std::size_t i = 0; i < knots_.size(); ++i)
    kv.knots_[i] = 1.0 - knots_[knots_.size() - 1 - i];
  kv.breaks_.resize(breaks_.size());
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    kv.breaks_[i] = 1.0 - breaks_[breaks_.size() - 1 - i];
  kv.breaks_.front() = 0.0;
  kv.breaks_.back() = 1.0;
  return kv;
}

KnotVector KnotVector::refined(int factor) const {
  MPFEEC_REQUIRE(factor >= 1, "refinement factor must be >= 1");
  std::vector<double> breaks;
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    for (int k = 0; k < factor; ++k)
      breaks.push_back(breaks_[i] +
                       (breaks_[i + 1] - breaks_[i]) * k / factor);
  }
  breaks.push_back(1.0);
  return from_breakpoints(degree_, breaks);
}

bool KnotVector::nested_in(const KnotVector &fine) const {
  if (degree_ != fine.degree_) return false;
  const double tol = 1e-12;
  std::size_t j = 0;
  for (double k : knots_) {
    while (j < fine.knots_.size() && fine.knots_[j] < k - tol) ++j;
    if (j >= fine.knots_.size() || std::abs(fine.knots_[j] - k) > tol)
      return false;
    ++j;
  }
  return true;
}

} // namespace mpfeec
