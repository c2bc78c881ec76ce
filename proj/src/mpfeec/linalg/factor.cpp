// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/factor.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/kernels.hpp"

namespace mpfeec {

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix &a) {
  using T = Eigen::Triplet<double>;
  std::vector<T> trips;
  trips.reserve(a.nnz());
  const auto &offs = a.row_offsets();
  const auto &cols = a.col_indices();
  const auto &vals = a.values();
  for (index_t r = 0; r < a.rows(); ++r)
    for (index_t k = offs[r]; k < offs[r + 1]; ++k)
      trips.emplace_back(static_cast<int>(r), static_cast<int>(cols[k]), vals[k]);
  Eigen::SparseMatrix<double> m(a.rows(), a.cols());
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

} // namespace

struct SparseFactorization::Impl {
  SparseMatrix a;
  Kind kind;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

SparseFactorization::SparseFactorization(const SparseMatrix &a, Kind kind)
    : impl_(std::make_unique<Impl>()), n_(a.rows()) {
  MPFEEC_REQUIRE(a.rows() == a.cols(), "factorization requires a square matrix");
  impl_->a = a;
  impl_->kind = kind;
  const Eigen::SparseMatrix<double> ea = to_eigen(a);
  if (kind == Kind::SPD) {
    impl_->llt.compute(ea);
    if (impl_->llt.info() != Eigen::Success)
      throw NumericalError("Cholesky factorization failed: matrix not SPD");
  } else {
    impl_->lu.compute(ea);
    if (impl_->lu.info() != Eigen::Success)
      throw NumericalError("sparse LU factorization failed: singular matrix");
  }
}

SparseFactorization::~SparseFactorization() = default;
SparseFactorization::SparseFactorization(SparseFactorization &&) noexcept = default;
SparseFactorization &
SparseFactorization::operator=(SparseFactorization &&) noexcept = default;

std::vector<double> SparseFactorization::solve(const std::vector<double> &b,
                                               double tol) const {
  MPFEEC_REQUIRE(static_cast<index_t>(b.size()) == n_, "solve shape mismatch");
  Eigen::Map<const Eigen::VectorXd> eb(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = impl_->kind == Kind::SPD ? impl_->llt.solve(eb).eval()
                                               : impl_->lu.solve(eb).eval();

  const auto &ops = kernels::active_ops();
  const double bnorm = std::sqrt(ops.nrm2_sq(b.data(), b.size()));
  std::vector<double> xv(x.data(), x.data() + x.size());
  std::vector<double> r(b.size());
  for (int pass = 0; pass < 3; ++pass) {
    impl_->a.apply(xv, r);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    const double rnorm = std::sqrt(ops.nrm2_sq(r.data(), r.size()));
    if (bnorm == 0.0 || rnorm <= tol * bnorm) return xv;
    Eigen::Map<const Eigen::VectorXd> er(r.data(), static_cast<Eigen::Index>(r.size()));
    Eigen::VectorXd dx = impl_->kind == Kind::SPD ? impl_->llt.solve(er).eval()
                                                  : impl_->lu.solve(er).eval();
    for (std::size_t i = 0; i < xv.size(); ++i) xv[i] += dx[static_cast<Eigen::Index>(i)];
  }
  impl_->a.apply(xv, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  const double rnorm = std::sqrt(ops.nrm2_sq(r.data(), r.size()));
  if (bnorm > 0.0 && rnorm > tol * bnorm)
    throw NumericalError("direct solve failed to reach requested residual");
  return xv;
}

std::vector<double> solve_spd(const SparseMatrix &a, const std::vector<double> &b,
                              double tol) {
  return SparseFactorization(a, SparseFactorization::Kind::SPD).solve(b, tol);
}

} // namespace mpfeec
