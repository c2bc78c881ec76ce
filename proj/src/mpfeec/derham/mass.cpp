// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/derham/mass.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/splines/quadrature.hpp"

namespace mpfeec {

namespace {

// 1D basis values per span and quadrature point, for the primal and derived
// space of one direction.
struct DirTable {
  QuadratureRule quad;
  // [span][q][local] with p+1 primal and p derived values
  std::vector<std::vector<std::vector<double>>> primal, derived;
  std::vector<std::vector<int>> pfirst, dfirst;
};

DirTable tabulate(const UnivariateSpace &primal, const UnivariateSpace &derived,
                  int npts) {
  DirTable t;
  t.quad = QuadratureRule(primal.knotvector().breakpoints(), npts);
  const int ns = t.quad.span_count();
  t.primal.resize(ns);
  t.derived.resize(ns);
  t.pfirst.resize(ns);
  t.dfirst.resize(ns);
  for (int s = 0; s < ns; ++s) {
    const auto &xs = t.quad.points(s);
    for (double x : xs) {
      BasisSpan bp = primal.eval_basis(x);
      BasisSpan bd = derived.eval_basis(x);
      t.primal[s].push_back(std::move(bp.values));
      t.derived[s].push_back(std::move(bd.values));
      t.pfirst[s].push_back(bp.first);
      t.dfirst[s].push_back(bd.first);
    }
  }
  return t;
}

} // namespace

SparseMatrix mass_matrix(const DeRhamSpaces &spaces, int level,
                         int quad_points) {
  MPFEEC_REQUIRE(level >= 0 && level <= 2, "space level must be 0, 1 or 2");
  const int p = spaces.degree();
  const int npts = quad_points > 0 ? quad_points : p + 1;
  TripletBuffer buf(spaces.dim(level), spaces.dim(level));

  for (int k = 0; k < spaces.num_patches(); ++k) {
    const auto &pk = spaces.patch(k);
    const auto &map = spaces.topology().patches()[k].mapping;
    const DirTable t1 = tabulate(pk.primal[0], pk.derived[0], npts);
    const DirTable t2 = tabulate(pk.primal[1], pk.derived[1], npts);

    for (int s1 = 0; s1 < t1.quad.span_count(); ++s1) {
      for (int s2 = 0; s2 < t2.quad.span_count(); ++s2) {
        for (int q1 = 0; q1 < npts; ++q1) {
          for (int q2 = 0; q2 < npts; ++q2) {
            const Vec2 xh{t1.quad.points(s1)[q1], t2.quad.points(s2)[q2]};
            const double w = t1.quad.weights(s1)[q1] * t2.quad.weights(s2)[q2];
            const Mat2 jac = map.jacobian(xh);
            const double jdet = det2(jac);
            if (jdet <= 0.0)
              throw GeometryError("singular Jacobian in mass assembly");

            if (level == 0) {
              const auto &v1 = t1.primal[s1][q1];
              const auto &v2 = t2.primal[s2][q2];
              const int f1 = t1.pfirst[s1][q1], f2 = t2.pfirst[s2][q2];
              const double wj = w * jdet;
              for (std::size_t a1 = 0; a1 < v1.size(); ++a1)
                for (std::size_t a2 = 0; a2 < v2.size(); ++a2) {
                  const index_t row = spaces.idx0(k, f1 + a1, f2 + a2);
                  const double va = v1[a1] * v2[a2];
                  for (std::size_t b1 = 0; b1 < v1.size(); ++b1)
                    for (std::size_t b2 = 0; b2 < v2.size(); ++b2)
                      buf.add(row, spaces.idx0(k, f1 + b1, f2 + b2),
                              wj * va * v1[b1] * v2[b2]);
                }
            } else if (level == 2) {
              const auto &v1 = t1.derived[s1][q1];
              const auto &v2 = t2.derived[s2][q2];
              const int f1 = t1.dfirst[s1][q1], f2 = t2.dfirst[s2][q2];
              const double wj = w / jdet;
              for (std::size_t a1 = 0; a1 < v1.size(); ++a1)
                for (std::size_t a2 = 0; a2 < v2.size(); ++a2) {
                  const index_t row = spaces.idx2(k, f1 + a1, f2 + a2);
                  const double va = v1[a1] * v2[a2];
                  for (std::size_t b1 = 0; b1 < v1.size(); ++b1)
                    for (std::size_t b2 = 0; b2 < v2.size(); ++b2)
                      buf.add(row, spaces.idx2(k, f1 + b1, f2 + b2),
                              wj * va * v1[b1] * v2[b2]);
                }
            } else {
              // Inverse metric tensor scaled by the area factor:
              // K = (DF^T DF)^{-1} * J.
              const double g11 = jac[0] * jac[0] + jac[2] * jac[2];
              const double g12 = jac[0] * jac[1] + jac[2] * jac[3];
              const double g22 = jac[1] * jac[1] + jac[3] * jac[3];
              const double k11 = w * g22 / jdet;
              const double k12 = -w * g12 / jdet;
              const double k22 = w * g11 / jdet;

              const auto &d1 = t1.derived[s1][q1];
              const auto &p2 = t2.primal[s2][q2];
              const auto &p1 = t1.primal[s1][q1];
              const auto &d2 = t2.derived[s2][q2];
              const int fd1 = t1.dfirst[s1][q1], fp2 = t2.pfirst[s2][q2];
              const int fp1 = t1.pfirst[s1][q1], fd2 = t2.dfirst[s2][q2];

              // component 1 x component 1
              for (std::size_t a1 = 0; a1 < d1.size(); ++a1)
                for (std::size_t a2 = 0; a2 < p2.size(); ++a2) {
                  const index_t row = spaces.idx1(k, 1, fd1 + a1, fp2 + a2);
                  const double va = d1[a1] * p2[a2];
                  for (std::size_t b1 = 0; b1 < d1.size(); ++b1)
                    for (std::size_t b2 = 0; b2 < p2.size(); ++b2)
                      buf.add(row, spaces.idx1(k, 1, fd1 + b1, fp2 + b2),
                              k11 * va * d1[b1] * p2[b2]);
                  // cross block 1 x 2
                  for (std::size_t b1 = 0; b1 < p1.size(); ++b1)
                    for (std::size_t b2 = 0; b2 < d2.size(); ++b2) {
                      const index_t col = spaces.idx1(k, 2, fp1 + b1, fd2 + b2);
                      const double v = k12 * va * p1[b1] * d2[b2];
                      buf.add(row, col, v);
                      buf.add(col, row, v);
                    }
                }
              // component 2 x component 2
              for (std::size_t a1 = 0; a1 < p1.size(); ++a1)
                for (std::size_t a2 = 0; a2 < d2.size(); ++a2) {
                  const index_t row = spaces.idx1(k, 2, fp1 + a1, fd2 + a2);
                  const double va = p1[a1] * d2[a2];
                  for (std::size_t b1 = 0; b1 < p1.size(); ++b1)
                    for (std::size_t b2 = 0; b2 < d2.size(); ++b2)
                      buf.add(row, spaces.idx1(k, 2, fp1 + b1, fd2 + b2),
                              k22 * va * p1[b1] * d2[b2]);
                }
            }
          }
        }
      }
    }
  }
  return buf.build();
}

} // namespace mpfeec
