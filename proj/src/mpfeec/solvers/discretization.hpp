// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_DISCRETIZATION_HPP
#define MPFEEC_SOLVERS_DISCRETIZATION_HPP

#include "mpfeec/derham/diff_matrices.hpp"
#include "mpfeec/derham/mass.hpp"
#include "mpfeec/derham/spaces.hpp"

namespace mpfeec {

/// Assembled broken-space operators shared by all model problems.
struct Discretization {
  std::shared_ptr<const DeRhamSpaces> spaces;
  SparseMatrix grad, curl;
  SparseMatrix m0, m1, m2;
};

Discretization discretize(const DomainSpec &domain, int degree);

} // namespace mpfeec

#endif
