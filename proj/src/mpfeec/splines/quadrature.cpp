// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

GaussRule compute_gauss(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      dp = n * (x * pn - p0) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

} // namespace

const GaussRule &gauss_legendre(int npoints) {
  MPFEEC_REQUIRE(npoints >= 1, "quadrature needs at least one point");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, compute_gauss(npoints)).first;
  return it->second;
}

QuadratureRule::QuadratureRule(const std::vector<double> &breakpoints,
                               int points_per_span)
    : pps_(points_per_span) {
  const GaussRule &g = gauss_legendre(points_per_span);
  spans_.resize(breakpoints.size() - 1);
  for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    const double a = breakpoints[s], b = breakpoints[s + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    spans_[s].x.resize(pps_);
    spans_[s].w.resize(pps_);
    for (int q = 0; q < pps_; ++q) {
      spans_[s].x[q] = mid + half * g.nodes[q];
      spans_[s].w[q] = half * g.weights[q];
    }
  }
}

double QuadratureRule::integrate(const std::function<double(double)> &f) const {
  double sum = 0.0;
  for (const Span &s : spans_)
    for (std::size_t q = 0; q < s.x.size(); ++q) sum += s.w[q] * f(s.x[q]);
  return sum;
}

} // namespace mpfeec
