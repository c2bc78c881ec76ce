// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/eigs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/linalg/kernels.hpp"

namespace mpfeec {

namespace {

struct Pair {
  double lambda;
  double residual;
  std::vector<double> vec; // B-normalized
};

double pencil_residual(const SparseMatrix &a, const SparseMatrix &b,
                       double lambda, const std::vector<double> &v) {
  const auto &ops = kernels::active_ops();
  std::vector<double> r(v.size(), 0.0);
  a.apply(v, r);
  b.apply_add(-lambda, v, r);
  const double vn = std::sqrt(ops.nrm2_sq(v.data(), v.size()));
  return std::sqrt(ops.nrm2_sq(r.data(), r.size())) / vn;
}

} // namespace

EigenResult generalized_eigs(const SparseMatrix &a, const SparseMatrix &b,
                             int k, double sigma, EigsOptions opts) {
  MPFEEC_REQUIRE(a.rows() == a.cols() && b.rows() == b.cols() &&
                     a.rows() == b.rows(),
                 "eigensolver shape mismatch");
  MPFEEC_REQUIRE(k >= 1, "eigensolver requires k >= 1");
  const index_t n = a.rows();
  const auto &ops = kernels::active_ops();

  std::unique_ptr<SparseFactorization> shifted;
  try {
    shifted = std::make_unique<SparseFactorization>(
        add(a, 1.0, b, -sigma), SparseFactorization::Kind::General);
  } catch (const NumericalError &) {
    throw NumericalError("shift-invert: sigma appears to be an eigenvalue, "
                         "choose a different shift");
  }
  std::unique_ptr<SparseFactorization> bfac;
  if (opts.filter_kernel)
    bfac = std::make_unique<SparseFactorization>(b, SparseFactorization::Kind::SPD);

  const int m = opts.krylov_dim > 0
                    ? opts.krylov_dim
                    : std::min<int>(static_cast<int>(n), 2 * k + 30);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Pair> locked; // converged Ritz pairs, including kernel modes
  std::vector<std::vector<double>> lockedB; // B * locked vectors

  auto orthogonalize = [&](std::vector<double> &w,
                           const std::vector<std::vector<double>> &vs,
                           const std::vector<std::vector<double>> &bvs) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const double c = ops.dot(bvs[i].data(), w.data(), w.size());
        if (c != 0.0) ops.axpy(-c, vs[i].data(), w.data(), w.size());
      }
    }
  };

  int stale_restarts = 0;
  for (int restart = 0; restart < opts.max_restarts; ++restart) {
    // Fresh start vector, optionally filtered through B^{-1} A which removes
    // all components in the pencil's zero-eigenvalue subspace.
    std::vector<double> v0(n);
    for (auto &x : v0) x = gauss(rng);
    if (opts.filter_kernel) {
      std::vector<double> t(n);
      a.apply(v0, t);
      v0 = bfac->solve(t, 1e-10);
    }
    orthogonalize(v0, [&] {
      std::vector<std::vector<double>> vs;
      for (auto &p : locked) vs.push_back(p.vec);
      return vs;
    }(), lockedB);
    std::vector<double> bv0(n);
    b.apply(v0, bv0);
    double nb = std::sqrt(ops.dot(v0.data(), bv0.data(), n));
    if (!(nb > 1e-14)) continue;
    ops.scale(1.0 / nb, v0.data(), n);

    std::vector<std::vector<double>> V{v0};
    std::vector<std::vector<double>> BV;
    {
      std::vector<double> t(n);
      b.apply(V[0], t);
      BV.push_back(std::move(t));
    }
    std::vector<double> alpha, beta;
    std::vector<std::vector<double>> locked_vecs;
    for (auto &p : locked) locked_vecs.push_back(p.vec);

    for (int j = 0; j < m; ++j) {
      std::vector<double> w = shifted->solve(BV[j], 1e-10);
      const double aj = ops.dot(BV[j].data(), w.data(), n);
      alpha.push_back(aj);
      // Full reorthogonalization against the current basis and locked pairs.
      orthogonalize(w, V, BV);
      orthogonalize(w, locked_vecs, lockedB);
      std::vector<double> bw(n);
      b.apply(w, bw);
      const double bj = std::sqrt(std::max(0.0, ops.dot(w.data(), bw.data(), n)));
      beta.push_back(bj);
      if (bj < 1e-13) break; // invariant subspace exhausted
      ops.scale(1.0 / bj, w.data(), n);
      ops.scale(1.0 / bj, bw.data(), n);
      V.push_back(std::move(w));
      BV.push_back(std::move(bw));
    }

    const int steps = static_cast<int>(alpha.size());
    if (steps == 0) continue;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
    for (int i = 0; i < steps; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    bool any_locked = false;
    for (int i = 0; i < steps; ++i) {
      const double theta = es.eigenvalues()(i);
      if (std::abs(theta) < 1e-12) continue; // maps to |lambda| = infinity
      const double op_res =
          (steps <= static_cast<int>(beta.size()) && beta[steps - 1] > 0.0)
              ? std::abs(beta[steps - 1] * es.eigenvectors()(steps - 1, i))
              : 0.0;
      if (op_res > 1e-8 * std::max(1.0, std::abs(theta))) continue;
      const double lambda = sigma + 1.0 / theta;
      std::vector<double> y(n, 0.0);
      for (int jj = 0; jj < steps; ++jj)
        ops.axpy(es.eigenvectors()(jj, i), V[jj].data(), y.data(), n);
      // Skip candidates parallel to an already locked pair.
      bool duplicate = false;
      for (std::size_t l = 0; l < locked.size(); ++l) {
        if (std::abs(locked[l].lambda - lambda) >
            1e-6 * std::max(1.0, std::abs(lambda)))
          continue;
        const double c = ops.dot(lockedB[l].data(), y.data(), n);
        if (std::abs(c) > 0.9) duplicate = true;
      }
      if (duplicate) continue;
      const double res = pencil_residual(a, b, lambda, y);
      if (res > opts.residual_tol * std::max(1.0, std::abs(lambda))) continue;
      std::vector<double> by(n);
      b.apply(y, by);
      const double ny = std::sqrt(ops.dot(y.data(), by.data(), n));
      if (!(ny > 1e-13)) continue;
      ops.scale(1.0 / ny, y.data(), n);
      ops.scale(1.0 / ny, by.data(), n);
      Pair p;
      p.lambda = lambda;
      p.residual = res;
      p.vec = std::move(y);
      locked.push_back(std::move(p));
      lockedB.push_back(std::move(by));
      any_locked = true;
    }

    stale_restarts = any_locked ? 0 : stale_restarts + 1;
    int usable = 0;
    for (auto &p : locked)
      if (!opts.drop_near_zero || p.lambda > opts.zero_cutoff) ++usable;
    if (usable >= k && stale_restarts >= 2) break;
    if (usable >= k + 2) break;
  }

  std::vector<const Pair *> sel;
  for (auto &p : locked)
    if (!opts.drop_near_zero || p.lambda > opts.zero_cutoff) sel.push_back(&p);
  if (static_cast<int>(sel.size()) < k)
    throw NumericalError("eigensolver: fewer than k pairs converged");
  std::sort(sel.begin(), sel.end(), [&](const Pair *x, const Pair *y) {
    return std::abs(x->lambda - sigma) < std::abs(y->lambda - sigma);
  });
  sel.resize(k);
  std::sort(sel.begin(), sel.end(),
            [](const Pair *x, const Pair *y) { return x->lambda < y->lambda; });

  EigenResult out;
  for (const Pair *p : sel) {
    out.eigenvalues.push_back(p->lambda);
    out.eigenvectors.push_back(p->vec);
    out.residuals.push_back(p->residual);
  }
  return out;
}

EigenResult dense_generalized_eigs(const SparseMatrix &a, const SparseMatrix &b,
                                   int k, double sigma, bool drop_near_zero,
                                   double zero_cutoff) {
  const index_t n = a.rows();
  MPFEEC_REQUIRE(n <= 600, "dense eigensolver limited to n <= 600");
  Eigen::MatrixXd da = Eigen::MatrixXd::Zero(n, n), db = Eigen::MatrixXd::Zero(n, n);
  for (index_t r = 0; r < n; ++r) {
    for (index_t c = 0; c < n; ++c) {
      da(r, c) = a.coeff(r, c);
      db(r, c) = b.coeff(r, c);
    }
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(da, db);
  if (es.info() != Eigen::Success)
    throw NumericalError("dense generalized eigensolver failed");
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    const double lam = es.eigenvalues()(i);
    if (drop_near_zero && lam <= zero_cutoff) continue;
    idx.push_back(i);
  }
  if (static_cast<int>(idx.size()) < k)
    throw NumericalError("dense eigensolver: fewer than k admissible pairs");
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    return std::abs(es.eigenvalues()(x) - sigma) <
           std::abs(es.eigenvalues()(y) - sigma);
  });
  idx.resize(k);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    return es.eigenvalues()(x) < es.eigenvalues()(y);
  });
  EigenResult out;
  for (int i : idx) {
    out.eigenvalues.push_back(es.eigenvalues()(i));
    std::vector<double> v(n);
    for (index_t r = 0; r < n; ++r) v[r] = es.eigenvectors()(r, i);
    out.residuals.push_back(pencil_residual(a, b, out.eigenvalues.back(), v));
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

} // namespace mpfeec
