// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SPLINES_BERNSTEIN_HPP
#define MPFEEC_SPLINES_BERNSTEIN_HPP

#include <vector>

namespace mpfeec {

/// The r Bernstein-type moment test polynomials on [0,1]:
///   q_j(x) = C(r,j) x^(j-1) (1-x)^(r-j),  j = 1..r.
/// They span the polynomials of degree r-1. r = 0 yields an empty set.
std::vector<double> bernstein_basis(int r, double x);

} // namespace mpfeec

#endif
