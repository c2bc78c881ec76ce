// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/bernstein.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

std::vector<double> bernstein_basis(int r, double x) {
  MPFEEC_REQUIRE(r >= 0, "bernstein order must be nonnegative");
  std::vector<double> q(r);
  double binom = static_cast<double>(r); // C(r,1)
  for (int j = 1; j <= r; ++j) {
    q[j - 1] = binom * std::pow(x, j - 1) * std::pow(1.0 - x, r - j);
    binom *= static_cast<double>(r - j) / (j + 1);
  }
  return q;
}

} // namespace mpfeec
