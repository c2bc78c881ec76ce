// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/linalg/csr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/kernels.hpp"

namespace mpfeec {

SparseMatrix::SparseMatrix(index_t rows, index_t cols)
    : rows_(rows), cols_(cols), offs_(static_cast<std::size_t>(rows) + 1, 0) {}

SparseMatrix SparseMatrix::identity(index_t n) {
  SparseMatrix m(n, n);
  m.cols_idx_.resize(n);
  m.vals_.assign(n, 1.0);
  std::iota(m.cols_idx_.begin(), m.cols_idx_.end(), index_t{0});
  std::iota(m.offs_.begin(), m.offs_.end(), index_t{0});
  return m;
}

SparseMatrix SparseMatrix::from_triplets(index_t rows, index_t cols,
                                         std::span<const index_t> ti,
                                         std::span<const index_t> tj,
                                         std::span<const double> tv) {
  MPFEEC_REQUIRE(ti.size() == tj.size() && tj.size() == tv.size(),
                 "triplet arrays must have equal length");
  SparseMatrix m(rows, cols);
  const std::size_t n = tv.size();
  std::vector<index_t> count(rows + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    MPFEEC_REQUIRE(ti[k] >= 0 && ti[k] < rows && tj[k] >= 0 && tj[k] < cols,
                   "triplet index out of range");
    ++count[ti[k] + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<index_t> cj(n);
  std::vector<double> cv(n);
  {
    std::vector<index_t> next(count.begin(), count.end() - 1);
    for (std::size_t k = 0; k < n; ++k) {
      const index_t pos = next[ti[k]]++;
      cj[pos] = tj[k];
      cv[pos] = tv[k];
    }
  }
  // Sort within rows and merge duplicates.
  m.offs_.assign(rows + 1, 0);
  for (index_t r = 0; r < rows; ++r) {
    const index_t b = count[r], e = count[r + 1];
    std::vector<index_t> perm(e - b);
    std::iota(perm.begin(), perm.end(), index_t{0});
    std::sort(perm.begin(), perm.end(),
              [&](index_t a, index_t bb) { return cj[b + a] < cj[b + bb]; });
    index_t last_col = -1;
    for (index_t p : perm) {
      const index_t c = cj[b + p];
      const double v = cv[b + p];
      if (c == last_col) {
        m.vals_.back() += v;
      } else {
        m.cols_idx_.push_back(c);
        m.vals_.push_back(v);
        last_col = c;
      }
    }
    m.offs_[r + 1] = static_cast<index_t>(m.vals_.size());
  }
  m.prune(0.0);
  return m;
}

double SparseMatrix::coeff(index_t i, index_t j) const {
  const index_t b = offs_[i], e = offs_[i + 1];
  auto it = std::lower_bound(cols_idx_.begin() + b, cols_idx_.begin() + e, j);
  if (it != cols_idx_.begin() + e && *it == j)
    return vals_[static_cast<std::size_t>(it - cols_idx_.begin())];
  return 0.0;
}

void SparseMatrix::apply(std::span<const double> x, std::span<double> y) const {
  MPFEEC_REQUIRE(static_cast<index_t>(x.size()) == cols_ &&
                     static_cast<index_t>(y.size()) == rows_,
                 "spmv shape mismatch");
  const auto &ops = kernels::active_ops();
  for (index_t r = 0; r < rows_; ++r) {
    const index_t b = offs_[r];
    y[r] = ops.csr_row_dot(vals_.data() + b, cols_idx_.data() + b,
                           static_cast<std::size_t>(offs_[r + 1] - b), x.data());
  }
}

std::vector<double> SparseMatrix::operator*(const std::vector<double> &x) const {
  std::vector<double> y(rows_);
  apply(x, y);
  return y;
}

void SparseMatrix::apply_add(double a, std::span<const double> x,
                             std::span<double> y) const {
  MPFEEC_REQUIRE(static_cast<index_t>(x.size()) == cols_ &&
                     static_cast<index_t>(y.size()) == rows_,
                 "spmv shape mismatch");
  const auto &ops = kernels::active_ops();
  for (index_t r = 0; r < rows_; ++r) {
    const index_t b = offs_[r];
    y[r] += a * ops.csr_row_dot(vals_.data() + b, cols_idx_.data() + b,
                                static_cast<std::size_t>(offs_[r + 1] - b),
                                x.data());
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<index_t> count(cols_ + 1, 0);
  for (index_t c : cols_idx_) ++count[c + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  t.offs_ = count;
  t.cols_idx_.resize(vals_.size());
  t.vals_.resize(vals_.size());
  std::vector<index_t> next(count.begin(), count.end() - 1);
  for (index_t r = 0; r < rows_; ++r) {
    for (index_t k = offs_[r]; k < offs_[r + 1]; ++k) {
      const index_t pos = next[cols_idx_[k]]++;
      t.cols_idx_[pos] = r;
      t.vals_[pos] = vals_[k];
    }
  }
  return t;
}

SparseMatrix SparseMatrix::scaled(double a) const {
  SparseMatrix m = *this;
  for (double &v : m.vals_) v *= a;
  return m;
}

void SparseMatrix::prune(double tol) {
  std::vector<index_t> offs(rows_ + 1, 0);
  std::size_t w = 0;
  for (index_t r = 0; r < rows_; ++r) {
    for (index_t k = offs_[r]; k < offs_[r + 1]; ++k) {
      if (std::abs(vals_[k]) > tol) {
        cols_idx_[w] = cols_idx_[k];
        vals_[w] = vals_[k];
        ++w;
      }
    }
    offs[r + 1] = static_cast<index_t>(w);
  }
  cols_idx_.resize(w);
  vals_.resize(w);
  offs_ = std::move(offs);
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : vals_) m = std::max(m, std::abs(v));
  return m;
}

double SparseMatrix::frobenius_norm() const {
  return std::sqrt(kernels::active_ops().nrm2_sq(vals_.data(), vals_.size()));
}

SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b) {
  MPFEEC_REQUIRE(a.cols_ == b.rows_, "spmm shape mismatch");
  SparseMatrix c(a.rows_, b.cols_);
  std::vector<double> acc(b.cols_, 0.0);
  std::vector<index_t> marker(b.cols_, -1);
  std::vector<index_t> rowcols;
  for (index_t r = 0; r < a.rows_; ++r) {
    rowcols.clear();
    for (index_t ka = a.offs_[r]; ka < a.offs_[r + 1]; ++ka) {
      const index_t j = a.cols_idx_[ka];
      const double av = a.vals_[ka];
      for (index_t kb = b.offs_[j]; kb < b.offs_[j + 1]; ++kb) {
        const index_t cc = b.cols_idx_[kb];
        if (marker[cc] != r) {
          marker[cc] = r;
          acc[cc] = 0.0;
          rowcols.push_back(cc);
        }
        acc[cc] += av * b.vals_[kb];
      }
    }
    std::sort(rowcols.begin(), rowcols.end());
    for (index_t cc : rowcols) {
      c.cols_idx_.push_back(cc);
      c.vals_.push_back(acc[cc]);
    }
    c.offs_[r + 1] = static_cast<index_t>(c.vals_.size());
  }
  c.prune(0.0);
  return c;
}

SparseMatrix add(const SparseMatrix &a, double alpha, const SparseMatrix &b,
                 double beta) {
  MPFEEC_REQUIRE(a.rows_ == b.rows_ && a.cols_ == b.cols_,
                 "sparse add shape mismatch");
  SparseMatrix c(a.rows_, a.cols_);
  for (index_t r = 0; r < a.rows_; ++r) {
    index_t ka = a.offs_[r], kb = b.offs_[r];
    const index_t ea = a.offs_[r + 1], eb = b.offs_[r + 1];
    while (ka < ea || kb < eb) {
      index_t col;
      double v = 0.0;
      if (ka < ea && (kb >= eb || a.cols_idx_[ka] <= b.cols_idx_[kb])) {
        col = a.cols_idx_[ka];
        v += alpha * a.vals_[ka++];
        if (kb < eb && b.cols_idx_[kb] == col) v += beta * b.vals_[kb++];
      } else {
        col = b.cols_idx_[kb];
        v += beta * b.vals_[kb++];
      }
      c.cols_idx_.push_back(col);
      c.vals_.push_back(v);
    }
    c.offs_[r + 1] = static_cast<index_t>(c.vals_.size());
  }
  c.prune(0.0);
  return c;
}

} // namespace mpfeec
