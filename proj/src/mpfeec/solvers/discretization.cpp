// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/solvers/discretization.hpp"

namespace mpfeec {

Discretization discretize(const DomainSpec &domain, int degree) {
  Discretization d;
  d.spaces = DeRhamSpaces::build(MultipatchTopology::build(domain, degree));
  d.grad = gradient_matrix(*d.spaces);
  d.curl = curl_matrix(*d.spaces);
  d.m0 = mass_matrix(*d.spaces, 0);
  d.m1 = mass_matrix(*d.spaces, 1);
  d.m2 = mass_matrix(*d.spaces, 2);
  return d;
}

} // namespace mpfeec
