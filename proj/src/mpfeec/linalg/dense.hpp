// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_LINALG_DENSE_HPP
#define MPFEEC_LINALG_DENSE_HPP

#include <vector>

namespace mpfeec {

/// Small dense row-major matrix used for 1D trace operators (E, R, moment
/// systems). Heavy lifting for factorizations is delegated to Eigen.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double &operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double> &data() const { return data_; }

  DenseMatrix transpose() const;
  std::vector<double> apply(const std::vector<double> &x) const;
  double max_abs() const;

  friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
  friend DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b);

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Solve A X = B (A square) by partial-pivot LU. Throws NumericalError on a
/// singular A. If cond_estimate is non-null it receives a 1-norm condition
/// estimate.
DenseMatrix dense_solve(const DenseMatrix &a, const DenseMatrix &b,
                        double *cond_estimate = nullptr);

std::vector<double> dense_solve(const DenseMatrix &a,
                                const std::vector<double> &b,
                                double *cond_estimate = nullptr);

} // namespace mpfeec

#endif
