// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/geometry/mapping.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

PatchMapping PatchMapping::affine(const Mat2 &a, const Vec2 &shift) {
  PatchMapping m;
  m.kind_ = MappingKind::Affine;
  m.a_ = a;
  m.b_ = shift;
  m.validate();
  return m;
}

PatchMapping PatchMapping::rectangle(double x0, double y0, double w, double h) {
  return affine({w, 0.0, 0.0, h}, {x0, y0});
}

PatchMapping PatchMapping::bilinear(const Vec2 &c00, const Vec2 &c10,
                                    const Vec2 &c11, const Vec2 &c01) {
  PatchMapping m;
  m.kind_ = MappingKind::Bilinear;
  m.corners_ = {c00, c10, c11, c01};
  m.validate();
  return m;
}

PatchMapping PatchMapping::annulus_section(const Vec2 &center, double r0,
                                           double r1, double theta0,
                                           double theta1) {
  MPFEEC_REQUIRE(r0 > 0.0 && r1 > r0, "annulus radii must satisfy 0 < r0 < r1");
  MPFEEC_REQUIRE(theta1 > theta0, "annulus angles must be increasing");
  PatchMapping m;
  m.kind_ = MappingKind::AnnulusSection;
  m.center_ = center;
  m.r0_ = r0;
  m.r1_ = r1;
  m.th0_ = theta0;
  m.th1_ = theta1;
  m.validate();
  return m;
}

Vec2 PatchMapping::map(const Vec2 &xh) const {
  switch (kind_) {
  case MappingKind::Affine:
    return {a_[0] * xh[0] + a_[1] * xh[1] + b_[0],
            a_[2] * xh[0] + a_[3] * xh[1] + b_[1]};
  case MappingKind::Bilinear: {
    const double s = xh[0], t = xh[1];
    Vec2 p{0, 0};
    const double w[4] = {(1 - s) * (1 - t), s * (1 - t), s * t, (1 - s) * t};
    for (int c = 0; c < 4; ++c) {
      p[0] += w[c] * corners_[c][0];
      p[1] += w[c] * corners_[c][1];
    }
    return p;
  }
  case MappingKind::AnnulusSection: {
    const double rho = r0_ + (r1_ - r0_) * xh[0];
    const double th = th0_ + (th1_ - th0_) * xh[1];
    return {center_[0] + rho * std::cos(th), center_[1] + rho * std::sin(th)};
  }
  }
  return {0, 0};
}

Mat2 PatchMapping::jacobian(const Vec2 &xh) const {
  switch (kind_) {
  case MappingKind::Affine:
    return a_;
  case MappingKind::Bilinear: {
    const double s = xh[0], t = xh[1];
    Mat2 j;
    for (int d = 0; d < 2; ++d) {
      const double d_s = (1 - t) * (corners_[1][d] - corners_[0][d]) +
                         t * (corners_[2][d] - corners_[3][d]);
      const double d_t = (1 - s) * (corners_[3][d] - corners_[0][d]) +
                         s * (corners_[2][d] - corners_[1][d]);
      j[2 * d] = d_s;
      j[2 * d + 1] = d_t;
    }
    return j;
  }
  case MappingKind::AnnulusSection: {
    const double rho = r0_ + (r1_ - r0_) * xh[0];
    const double th = th0_ + (th1_ - th0_) * xh[1];
    const double dr = r1_ - r0_, dth = th1_ - th0_;
    return {dr * std::cos(th), -rho * dth * std::sin(th), dr * std::sin(th),
            rho * dth * std::cos(th)};
  }
  }
  return {1, 0, 0, 1};
}

bool PatchMapping::invert(const Vec2 &x, Vec2 &xh, double tol,
                          int max_iterations) const {
  xh = {0.5, 0.5};
  for (int it = 0; it < max_iterations; ++it) {
    const Vec2 f = map(xh);
    const Vec2 r{f[0] - x[0], f[1] - x[1]};
    if (std::abs(r[0]) + std::abs(r[1]) < tol) break;
    const Mat2 j = jacobian(xh);
    const double d = det2(j);
    if (std::abs(d) < 1e-14) return false;
    const double dx0 = (j[3] * r[0] - j[1] * r[1]) / d;
    const double dx1 = (-j[2] * r[0] + j[0] * r[1]) / d;
    xh[0] = std::min(1.0, std::max(0.0, xh[0] - dx0));
    xh[1] = std::min(1.0, std::max(0.0, xh[1] - dx1));
  }
  const Vec2 f = map(xh);
  return std::abs(f[0] - x[0]) + std::abs(f[1] - x[1]) < 100 * tol;
}

void PatchMapping::validate() const {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const Vec2 xh{i / 20.0, j / 20.0};
      if (jacobian_det(xh) <= 0.0)
        throw GeometryError("patch mapping has nonpositive Jacobian at sample "
                            "point: " + describe());
    }
  }
}

std::string PatchMapping::describe() const {
  switch (kind_) {
  case MappingKind::Affine:
    return "affine";
  case MappingKind::Bilinear:
    return "bilinear";
  case MappingKind::AnnulusSection:
    return "annulus-section";
  }
  return "?";
}

} // namespace mpfeec
