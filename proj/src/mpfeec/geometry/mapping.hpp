// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_GEOMETRY_MAPPING_HPP
#define MPFEEC_GEOMETRY_MAPPING_HPP

#include <array>
#include <string>

namespace mpfeec {

using Vec2 = std::array<double, 2>;

/// 2x2 Jacobian, row-major: m[0]=dF1/dx1, m[1]=dF1/dx2, m[2]=dF2/dx1,
/// m[3]=dF2/dx2.
using Mat2 = std::array<double, 4>;

inline double det2(const Mat2 &m) { return m[0] * m[3] - m[1] * m[2]; }

enum class MappingKind { Affine, Bilinear, AnnulusSection };

/// Analytic C1 diffeomorphism from the logical square [0,1]^2 onto a patch.
/// The Jacobian determinant is validated positive on a 20x20 sample grid at
/// construction.
class PatchMapping {
public:
  /// Defaults to the identity map of the unit square.
  PatchMapping() = default;

  static PatchMapping affine(const Mat2 &a, const Vec2 &shift);
  /// Axis-aligned rectangle [x0,x0+w] x [y0,y0+h].
  static PatchMapping rectangle(double x0, double y0, double w, double h);
  /// Bilinear patch through the corners F(0,0), F(1,0), F(1,1), F(0,1).
  static PatchMapping bilinear(const Vec2 &c00, const Vec2 &c10,
                               const Vec2 &c11, const Vec2 &c01);
  /// Annulus section: radius r0..r1 along x1, angle theta0..theta1 along x2.
  static PatchMapping annulus_section(const Vec2 &center, double r0, double r1,
                                      double theta0, double theta1);

  MappingKind kind() const { return kind_; }

  Vec2 map(const Vec2 &xh) const;
  Mat2 jacobian(const Vec2 &xh) const;
  double jacobian_det(const Vec2 &xh) const { return det2(jacobian(xh)); }

  /// Newton inversion clamped to the logical square. Returns false when x is
  /// not attained on this patch within tol.
  bool invert(const Vec2 &x, Vec2 &xh, double tol = 1e-12,
              int max_iterations = 50) const;

  std::string describe() const;

private:
  void validate() const;

  MappingKind kind_ = MappingKind::Affine;
  // Affine: x = A xh + b. Bilinear: corner list. Annulus: center, radii,
  // angles.
  Mat2 a_{1, 0, 0, 1};
  Vec2 b_{0, 0};
  std::array<Vec2, 4> corners_{};
  Vec2 center_{0, 0};
  double r0_ = 0, r1_ = 1, th0_ = 0, th1_ = 1;
};

} // namespace mpfeec

#endif
