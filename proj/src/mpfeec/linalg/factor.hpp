// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_FACTOR_HPP
#define MPFEEC_LINALG_FACTOR_HPP

#include <memory>
#include <vector>

#include "mpfeec/linalg/csr.hpp"

namespace mpfeec {

/// Direct sparse factorization. SPD matrices use a sparse Cholesky, symmetric
/// indefinite and general matrices a sparse LU. One numeric factorization,
/// arbitrarily many concurrent solves.
class SparseFactorization {
public:
  enum class Kind { SPD, General };

  SparseFactorization(const SparseMatrix &a, Kind kind);
  ~SparseFactorization();
  SparseFactorization(SparseFactorization &&) noexcept;
  SparseFactorization &operator=(SparseFactorization &&) noexcept;

  /// Solve A x = b with one step of iterative refinement. Throws
  /// NumericalError if the relative residual stays above tol.
  std::vector<double> solve(const std::vector<double> &b,
                            double tol = 1e-11) const;

  index_t size() const { return n_; }

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  index_t n_ = 0;
};

/// Factor-and-solve convenience for SPD systems.
std::vector<double> solve_spd(const SparseMatrix &a, const std::vector<double> &b,
                              double tol = 1e-11);

} // namespace mpfeec

#endif
