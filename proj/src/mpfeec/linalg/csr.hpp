// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_CSR_HPP
#define MPFEEC_LINALG_CSR_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mpfeec {

using index_t = std::int64_t;

/// Compressed-row sparse matrix. Column indices are sorted and unique within
/// each row; finalize() drops explicit zeros.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(index_t rows, index_t cols);

  static SparseMatrix identity(index_t n);
  static SparseMatrix from_triplets(index_t rows, index_t cols,
                                    std::span<const index_t> ti,
                                    std::span<const index_t> tj,
                                    std::span<const double> tv);

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  index_t nnz() const { return static_cast<index_t>(vals_.size()); }

  const std::vector<index_t> &row_offsets() const { return offs_; }
  const std::vector<index_t> &col_indices() const { return cols_idx_; }
  const std::vector<double> &values() const { return vals_; }

  double coeff(index_t i, index_t j) const;

  /// y = A x
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(const std::vector<double> &x) const;

  /// y += a * (A x)
  void apply_add(double a, std::span<const double> x, std::span<double> y) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(double a) const;

  /// Drop entries with |v| <= tol (tol = 0 removes exact zeros only).
  void prune(double tol = 0.0);

  double max_abs() const;
  double frobenius_norm() const;

  friend SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b);
  friend SparseMatrix add(const SparseMatrix &a, double alpha,
                          const SparseMatrix &b, double beta);

private:
  index_t rows_ = 0, cols_ = 0;
  std::vector<index_t> offs_{0};
  std::vector<index_t> cols_idx_;
  std::vector<double> vals_;
};

SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b);
SparseMatrix add(const SparseMatrix &a, double alpha, const SparseMatrix &b,
                 double beta);

/// Convenience triplet accumulator for assembly loops.
class TripletBuffer {
public:
  TripletBuffer(index_t rows, index_t cols) : rows_(rows), cols_(cols) {}
  void add(index_t i, index_t j, double v) {
    ti_.push_back(i);
    tj_.push_back(j);
    tv_.push_back(v);
  }
  SparseMatrix build() const {
    return SparseMatrix::from_triplets(rows_, cols_, ti_, tj_, tv_);
  }
  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }

private:
  index_t rows_, cols_;
  std::vector<index_t> ti_, tj_;
  std::vector<double> tv_;
};

} // namespace mpfeec

#endif
