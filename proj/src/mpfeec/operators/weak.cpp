// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/operators/weak.hpp"

namespace mpfeec {

WeakOperator::WeakOperator(SparseMatrix diff_proj, const SparseMatrix &mass_out,
                           SparseMatrix mass_in, double sign)
    : composed_t_(diff_proj.transpose()), mass_in_(std::move(mass_in)),
      mass_out_solver_(std::make_shared<SparseFactorization>(
          mass_out, SparseFactorization::Kind::SPD)),
      sign_(sign) {}

WeakOperator WeakOperator::divergence(const SparseMatrix &grad,
                                      const SparseMatrix &p0,
                                      const SparseMatrix &m0,
                                      const SparseMatrix &m1) {
  return WeakOperator(multiply(grad, p0), m0, m1, -1.0);
}

WeakOperator WeakOperator::curl(const SparseMatrix &curlmat,
                                const SparseMatrix &p1, const SparseMatrix &m1,
                                const SparseMatrix &m2) {
  return WeakOperator(multiply(curlmat, p1), m1, m2, 1.0);
}

std::vector<double> WeakOperator::apply(const std::vector<double> &u) const {
  std::vector<double> mu(mass_in_.rows());
  mass_in_.apply(u, mu);
  std::vector<double> rhs(composed_t_.rows());
  composed_t_.apply(mu, rhs);
  if (sign_ != 1.0)
    for (double &v : rhs) v *= sign_;
  return mass_out_solver_->solve(rhs);
}

namespace {

FemField filtered_impl(std::shared_ptr<const DeRhamSpaces> spaces, int level,
                       const SparseMatrix &mass, const SparseMatrix &proj,
                       std::vector<double> f) {
  std::vector<double> rhs(proj.cols());
  proj.transpose().apply(f, rhs);
  SparseFactorization chol(mass, SparseFactorization::Kind::SPD);
  return FemField(level, std::move(spaces), chol.solve(rhs));
}

} // namespace

FemField filtered_projection(std::shared_ptr<const DeRhamSpaces> spaces,
                             int level, const SparseMatrix &mass,
                             const SparseMatrix &proj, const ScalarField &v) {
  auto f = moment_vector(*spaces, level, v);
  return filtered_impl(std::move(spaces), level, mass, proj, std::move(f));
}

FemField filtered_projection(std::shared_ptr<const DeRhamSpaces> spaces,
                             const SparseMatrix &mass, const SparseMatrix &proj,
                             const VectorField &v) {
  auto f = moment_vector(*spaces, v);
  return filtered_impl(std::move(spaces), 1, mass, proj, std::move(f));
}

SparseMatrix jump_stabilization(const SparseMatrix &mass,
                                const SparseMatrix &proj) {
  const SparseMatrix jump =
      add(SparseMatrix::identity(proj.rows()), 1.0, proj, -1.0);
  return multiply(jump.transpose(), multiply(mass, jump));
}

} // namespace mpfeec
