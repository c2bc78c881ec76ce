// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/derham/project.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/derham/evaluate.hpp"
#include "mpfeec/derham/mass.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/splines/quadrature.hpp"

namespace mpfeec {

namespace {

// Shared quadrature sweep over all patches: cb(k, xh, w) with w the logical
// quadrature weight.
void for_each_quad_point(
    const DeRhamSpaces &spaces, int npts,
    const std::function<void(int, const Vec2 &, double)> &cb) {
  for (int k = 0; k < spaces.num_patches(); ++k) {
    const auto &pk = spaces.patch(k);
    QuadratureRule q1(pk.primal[0].knotvector().breakpoints(), npts);
    QuadratureRule q2(pk.primal[1].knotvector().breakpoints(), npts);
    for (int s1 = 0; s1 < q1.span_count(); ++s1)
      for (int s2 = 0; s2 < q2.span_count(); ++s2)
        for (int a = 0; a < npts; ++a)
          for (int b = 0; b < npts; ++b)
            cb(k, Vec2{q1.points(s1)[a], q2.points(s2)[b]},
               q1.weights(s1)[a] * q2.weights(s2)[b]);
  }
}

} // namespace

std::vector<double> moment_vector(const DeRhamSpaces &spaces, int level,
                                  const ScalarField &v, int quad_points) {
  MPFEEC_REQUIRE(level == 0 || level == 2, "scalar moments need level 0 or 2");
  const int npts = quad_points > 0 ? quad_points : spaces.degree() + 2;
  std::vector<double> f(spaces.dim(level), 0.0);
  for_each_quad_point(spaces, npts, [&](int k, const Vec2 &xh, double w) {
    const auto &pk = spaces.patch(k);
    const auto &map = spaces.topology().patches()[k].mapping;
    const Vec2 x = map.map(xh);
    const double val = v(x[0], x[1]);
    if (level == 0) {
      const double jdet = map.jacobian_det(xh);
      const BasisSpan b1 = pk.primal[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.primal[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          f[spaces.idx0(k, b1.first + a, b2.first + b)] +=
              w * jdet * val * b1.values[a] * b2.values[b];
    } else {
      // <v, F2(g)> = int v(F(xh)) g(xh) dxh; the 1/J and J factors cancel.
      const BasisSpan b1 = pk.derived[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.derived[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          f[spaces.idx2(k, b1.first + a, b2.first + b)] +=
              w * val * b1.values[a] * b2.values[b];
    }
  });
  return f;
}

std::vector<double> moment_vector(const DeRhamSpaces &spaces,
                                  const VectorField &v, int quad_points) {
  const int npts = quad_points > 0 ? quad_points : spaces.degree() + 2;
  std::vector<double> f(spaces.dim(1), 0.0);
  for_each_quad_point(spaces, npts, [&](int k, const Vec2 &xh, double w) {
    const auto &pk = spaces.patch(k);
    const auto &map = spaces.topology().patches()[k].mapping;
    const Vec2 x = map.map(xh);
    const Vec2 val = v(x[0], x[1]);
    // <v, DF^{-T} e_d lambda-hat> J = (DF^{-1} v)_d lambda-hat J;
    // DF^{-1} = adj(DF)/J, so the J factors cancel against adj(DF).
    const Mat2 j = map.jacobian(xh);
    const double u1 = j[3] * val[0] - j[1] * val[1];  // J * (DF^{-1} v)_1
    const double u2 = -j[2] * val[0] + j[0] * val[1]; // J * (DF^{-1} v)_2
    {
      const BasisSpan b1 = pk.derived[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.primal[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          f[spaces.idx1(k, 1, b1.first + a, b2.first + b)] +=
              w * u1 * b1.values[a] * b2.values[b];
    }
    {
      const BasisSpan b1 = pk.primal[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.derived[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          f[spaces.idx1(k, 2, b1.first + a, b2.first + b)] +=
              w * u2 * b1.values[a] * b2.values[b];
    }
  });
  return f;
}

namespace {

FemField project_impl(std::shared_ptr<const DeRhamSpaces> spaces, int level,
                      std::vector<double> rhs) {
  const SparseMatrix m = mass_matrix(*spaces, level);
  SparseFactorization chol(m, SparseFactorization::Kind::SPD);
  return FemField(level, std::move(spaces), chol.solve(rhs));
}

} // namespace

FemField l2_project_broken(std::shared_ptr<const DeRhamSpaces> spaces,
                           int level, const ScalarField &v) {
  auto rhs = moment_vector(*spaces, level, v);
  return project_impl(std::move(spaces), level, std::move(rhs));
}

FemField l2_project_broken(std::shared_ptr<const DeRhamSpaces> spaces,
                           const VectorField &v) {
  auto rhs = moment_vector(*spaces, v);
  return project_impl(std::move(spaces), 1, std::move(rhs));
}

double l2_error(const FemField &field, const ScalarField &exact) {
  MPFEEC_REQUIRE(field.level == 0 || field.level == 2,
                 "scalar error needs a level 0 or 2 field");
  const DeRhamSpaces &sp = *field.spaces;
  double acc = 0.0;
  for_each_quad_point(sp, sp.degree() + 3, [&](int k, const Vec2 &xh, double w) {
    const auto &map = sp.topology().patches()[k].mapping;
    const Vec2 x = map.map(xh);
    const double jdet = map.jacobian_det(xh);
    const double diff = evaluate_field(field, k, xh)[0] - exact(x[0], x[1]);
    acc += w * jdet * diff * diff;
  });
  return std::sqrt(acc);
}

double l2_error(const FemField &field, const VectorField &exact) {
  MPFEEC_REQUIRE(field.level == 1, "vector error needs a level 1 field");
  const DeRhamSpaces &sp = *field.spaces;
  double acc = 0.0;
  for_each_quad_point(sp, sp.degree() + 3, [&](int k, const Vec2 &xh, double w) {
    const auto &map = sp.topology().patches()[k].mapping;
    const Vec2 x = map.map(xh);
    const double jdet = map.jacobian_det(xh);
    const Vec2 uh = evaluate_field(field, k, xh);
    const Vec2 ue = exact(x[0], x[1]);
    acc += w * jdet *
           ((uh[0] - ue[0]) * (uh[0] - ue[0]) + (uh[1] - ue[1]) * (uh[1] - ue[1]));
  });
  return std::sqrt(acc);
}

double l2_norm(const DeRhamSpaces &spaces, const ScalarField &f) {
  double acc = 0.0;
  for_each_quad_point(spaces, spaces.degree() + 3,
                      [&](int k, const Vec2 &xh, double w) {
                        const auto &map = spaces.topology().patches()[k].mapping;
                        const Vec2 x = map.map(xh);
                        const double v = f(x[0], x[1]);
                        acc += w * map.jacobian_det(xh) * v * v;
                      });
  return std::sqrt(acc);
}

double l2_norm(const DeRhamSpaces &spaces, const VectorField &f) {
  double acc = 0.0;
  for_each_quad_point(spaces, spaces.degree() + 3,
                      [&](int k, const Vec2 &xh, double w) {
                        const auto &map = spaces.topology().patches()[k].mapping;
                        const Vec2 x = map.map(xh);
                        const Vec2 v = f(x[0], x[1]);
                        acc += w * map.jacobian_det(xh) *
                               (v[0] * v[0] + v[1] * v[1]);
                      });
  return std::sqrt(acc);
}

} // namespace mpfeec
