// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/splines/knot_insertion.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

int span_of(const std::vector<double> &t, int degree, int nbasis, double u) {
  int lo = degree, hi = nbasis;
  if (u >= t[hi]) return hi - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (t[mid] <= u)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

} // namespace

DenseMatrix knot_insertion_matrix(const UnivariateSpace &coarse,
                                  const UnivariateSpace &fine) {
  const int p = coarse.degree();
  if (p != fine.degree() || !coarse.knotvector().nested_in(fine.knotvector()))
    throw GeometryError("knot insertion requires nested knot vectors of equal "
                        "degree");

  // Fine knots not present in the coarse vector, with multiplicity.
  const auto &ck = coarse.knotvector().knots();
  const auto &fk = fine.knotvector().knots();
  std::vector<double> missing;
  {
    std::size_t i = 0;
    for (double u : fk) {
      if (i < ck.size() && std::abs(ck[i] - u) <= 1e-12)
        ++i;
      else
        missing.push_back(u);
    }
  }

  std::vector<double> cur = ck;
  DenseMatrix e = DenseMatrix::identity(coarse.dim());
  for (double u : missing) {
    const int nb = static_cast<int>(cur.size()) - p - 1;
    const int l = span_of(cur, p, nb, u);
    DenseMatrix step(nb + 1, nb);
    for (int i = 0; i <= nb; ++i) {
      if (i <= l - p) {
        step(i, i) = 1.0;
      } else if (i <= l) {
        const double alpha = (u - cur[i]) / (cur[i + p] - cur[i]);
        step(i, i) = alpha;
        step(i, i - 1) = 1.0 - alpha;
      } else {
        step(i, i - 1) = 1.0;
      }
    }
    e = step * e;
    cur.insert(cur.begin() + l + 1, u);
  }
  return e;
}

} // namespace mpfeec
