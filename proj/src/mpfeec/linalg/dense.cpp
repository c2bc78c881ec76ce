// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/dense.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix &m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

DenseMatrix from_eigen(const Eigen::MatrixXd &e) {
  DenseMatrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

} // namespace

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> DenseMatrix::apply(const std::vector<double> &x) const {
  MPFEEC_REQUIRE(static_cast<int>(x.size()) == cols_, "dense apply shape mismatch");
  std::vector<double> y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
  MPFEEC_REQUIRE(a.cols_ == b.rows_, "dense multiply shape mismatch");
  DenseMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const double av = a(i, k);
      if (av == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += av * b(k, j);
    }
  return c;
}

DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b) {
  MPFEEC_REQUIRE(a.rows_ == b.rows_ && a.cols_ == b.cols_,
                 "dense subtract shape mismatch");
  DenseMatrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

DenseMatrix dense_solve(const DenseMatrix &a, const DenseMatrix &b,
                        double *cond_estimate) {
  MPFEEC_REQUIRE(a.rows() == a.cols() && a.rows() == b.rows(),
                 "dense solve shape mismatch");
  Eigen::MatrixXd ea = to_eigen(a);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(ea);
  const Eigen::MatrixXd x = lu.solve(to_eigen(b));
  const double resid = (ea * x - to_eigen(b)).cwiseAbs().maxCoeff();
  const double scale = to_eigen(b).cwiseAbs().maxCoeff() + 1.0;
  if (!x.allFinite() || resid > 1e-6 * scale)
    throw NumericalError("dense solve: singular or badly conditioned matrix");
  if (cond_estimate) {
    const Eigen::MatrixXd inv = lu.inverse();
    *cond_estimate = ea.cwiseAbs().colwise().sum().maxCoeff() *
                     inv.cwiseAbs().colwise().sum().maxCoeff();
  }
  return from_eigen(x);
}

std::vector<double> dense_solve(const DenseMatrix &a,
                                const std::vector<double> &b,
                                double *cond_estimate) {
  DenseMatrix bm(static_cast<int>(b.size()), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(static_cast<int>(i), 0) = b[i];
  const DenseMatrix xm = dense_solve(a, bm, cond_estimate);
  std::vector<double> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = xm(static_cast<int>(i), 0);
  return x;
}

} // namespace mpfeec
