// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/derham/diff_matrices.hpp"

namespace mpfeec {

namespace {

// Rows of the 1D derivative stencil: d_i = p (c_{i+1} - c_i) / dt_i.
struct Stencil1d {
  std::vector<double> inv_dt;
};

Stencil1d make_stencil(const UnivariateSpace &primal) {
  const int p = primal.degree();
  const auto &t = primal.knotvector().knots();
  const int n = primal.dim() - 1;
  Stencil1d s;
  s.inv_dt.resize(n);
  for (int i = 0; i < n; ++i) s.inv_dt[i] = p / (t[i + p + 1] - t[i + 1]);
  return s;
}

} // namespace

SparseMatrix gradient_matrix(const DeRhamSpaces &spaces) {
  TripletBuffer buf(spaces.dim(1), spaces.dim(0));
  for (int k = 0; k < spaces.num_patches(); ++k) {
    const auto &p = spaces.patch(k);
    const Stencil1d d1 = make_stencil(p.primal[0]);
    const Stencil1d d2 = make_stencil(p.primal[1]);
    // component 1: (D x I) over coefficients
    for (int i1 = 0; i1 < p.ddim[0]; ++i1)
      for (int i2 = 0; i2 < p.pdim[1]; ++i2) {
        const index_t row = spaces.idx1(k, 1, i1, i2);
        buf.add(row, spaces.idx0(k, i1 + 1, i2), d1.inv_dt[i1]);
        buf.add(row, spaces.idx0(k, i1, i2), -d1.inv_dt[i1]);
      }
    // component 2: (I x D)
    for (int i1 = 0; i1 < p.pdim[0]; ++i1)
      for (int i2 = 0; i2 < p.ddim[1]; ++i2) {
        const index_t row = spaces.idx1(k, 2, i1, i2);
        buf.add(row, spaces.idx0(k, i1, i2 + 1), d2.inv_dt[i2]);
        buf.add(row, spaces.idx0(k, i1, i2), -d2.inv_dt[i2]);
      }
  }
  return buf.build();
}

SparseMatrix curl_matrix(const DeRhamSpaces &spaces) {
  TripletBuffer buf(spaces.dim(2), spaces.dim(1));
  for (int k = 0; k < spaces.num_patches(); ++k) {
    const auto &p = spaces.patch(k);
    const Stencil1d d1 = make_stencil(p.primal[0]);
    const Stencil1d d2 = make_stencil(p.primal[1]);
    for (int i1 = 0; i1 < p.ddim[0]; ++i1)
      for (int i2 = 0; i2 < p.ddim[1]; ++i2) {
        const index_t row = spaces.idx2(k, i1, i2);
        // d1 u2: derivative in direction 1 of the second component
        buf.add(row, spaces.idx1(k, 2, i1 + 1, i2), d1.inv_dt[i1]);
        buf.add(row, spaces.idx1(k, 2, i1, i2), -d1.inv_dt[i1]);
        // -d2 u1
        buf.add(row, spaces.idx1(k, 1, i1, i2 + 1), -d2.inv_dt[i2]);
        buf.add(row, spaces.idx1(k, 1, i1, i2), d2.inv_dt[i2]);
      }
  }
  return buf.build();
}

} // namespace mpfeec
