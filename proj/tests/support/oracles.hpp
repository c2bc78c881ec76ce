// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

// Independent oracle implementations used by the test suite. These stay
// deliberately naive and separate from the library code paths they check.

#ifndef MPFEEC_TESTS_ORACLES_HPP
#define MPFEEC_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mpfeec/linalg/csr.hpp"

namespace oracles {

/// Textbook Cox-de Boor recursion, one basis function at a time.
inline double deboor_basis(const std::vector<double> &knots, int i, int p,
                           double x) {
  if (p == 0) {
    const bool last = static_cast<std::size_t>(i + 2) == knots.size();
    if (last || (knots[i + 1] == knots.back() && x == knots.back()))
      return (x >= knots[i] && x <= knots[i + 1]) ? 1.0 : 0.0;
    return (x >= knots[i] && x < knots[i + 1]) ? 1.0 : 0.0;
  }
  double left = 0.0, right = 0.0;
  const double dl = knots[i + p] - knots[i];
  if (dl > 0.0) left = (x - knots[i]) / dl * deboor_basis(knots, i, p - 1, x);
  const double dr = knots[i + p + 1] - knots[i + 1];
  if (dr > 0.0)
    right = (knots[i + p + 1] - x) / dr * deboor_basis(knots, i + 1, p - 1, x);
  return left + right;
}

/// Composite Simpson integration on [a, b].
inline double simpson(const std::function<double(double)> &f, double a,
                      double b, int intervals = 4096) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Plain dense matrix as nested vectors.
using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const mpfeec::SparseMatrix &m) {
  Dense d(m.rows(), std::vector<double>(m.cols(), 0.0));
  const auto &offs = m.row_offsets();
  const auto &cols = m.col_indices();
  const auto &vals = m.values();
  for (mpfeec::index_t r = 0; r < m.rows(); ++r)
    for (mpfeec::index_t k = offs[r]; k < offs[r + 1]; ++k)
      d[r][cols[k]] = vals[k];
  return d;
}

inline Dense matmul(const Dense &a, const Dense &b) {
  Dense c(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline std::vector<double> matvec(const Dense &a, const std::vector<double> &x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_gauss_solve(Dense a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

/// Numerical rank by row echelon reduction with partial pivoting.
inline int dense_rank(Dense a, double rel_tol = 1e-9) {
  if (a.empty()) return 0;
  double scale = 0.0;
  for (const auto &row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    for (int r = rank + 1; r < rows; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= tol) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      const double f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<double> random_vector(std::size_t n, std::uint64_t seed,
                                         double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(lo, hi);
  std::vector<double> v(n);
  for (double &x : v) x = unif(rng);
  return v;
}

} // namespace oracles

#endif
