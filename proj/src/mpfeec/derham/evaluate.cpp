// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/derham/evaluate.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

Vec2 evaluate_pullback(const DeRhamSpaces &sp, int level,
                       std::span<const double> coeffs, int patch,
                       const Vec2 &xh) {
  const auto &pk = sp.patch(patch);
  Vec2 out{0.0, 0.0};
  if (level == 0) {
    const BasisSpan b1 = pk.primal[0].eval_basis(xh[0]);
    const BasisSpan b2 = pk.primal[1].eval_basis(xh[1]);
    for (std::size_t a = 0; a < b1.values.size(); ++a)
      for (std::size_t b = 0; b < b2.values.size(); ++b)
        out[0] += coeffs[sp.idx0(patch, b1.first + a, b2.first + b)] *
                  b1.values[a] * b2.values[b];
  } else if (level == 2) {
    const BasisSpan b1 = pk.derived[0].eval_basis(xh[0]);
    const BasisSpan b2 = pk.derived[1].eval_basis(xh[1]);
    for (std::size_t a = 0; a < b1.values.size(); ++a)
      for (std::size_t b = 0; b < b2.values.size(); ++b)
        out[0] += coeffs[sp.idx2(patch, b1.first + a, b2.first + b)] *
                  b1.values[a] * b2.values[b];
  } else {
    {
      const BasisSpan b1 = pk.derived[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.primal[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          out[0] += coeffs[sp.idx1(patch, 1, b1.first + a, b2.first + b)] *
                    b1.values[a] * b2.values[b];
    }
    {
      const BasisSpan b1 = pk.primal[0].eval_basis(xh[0]);
      const BasisSpan b2 = pk.derived[1].eval_basis(xh[1]);
      for (std::size_t a = 0; a < b1.values.size(); ++a)
        for (std::size_t b = 0; b < b2.values.size(); ++b)
          out[1] += coeffs[sp.idx1(patch, 2, b1.first + a, b2.first + b)] *
                    b1.values[a] * b2.values[b];
    }
  }
  return out;
}

Vec2 evaluate_field_pullback(const FemField &field, int patch, const Vec2 &xh) {
  return evaluate_pullback(*field.spaces, field.level, field.coeffs, patch, xh);
}

Vec2 evaluate_field(const FemField &field, int patch, const Vec2 &xh) {
  const Vec2 raw = evaluate_field_pullback(field, patch, xh);
  const auto &map = field.spaces->topology().patches()[patch].mapping;
  if (field.level == 0) return raw;
  const Mat2 j = map.jacobian(xh);
  const double d = det2(j);
  if (field.level == 2) return {raw[0] / d, 0.0};
  // DF^{-T} u-hat
  return {(j[3] * raw[0] - j[2] * raw[1]) / d,
          (-j[1] * raw[0] + j[0] * raw[1]) / d};
}

Vec2 evaluate_field_physical(const FemField &field, const Vec2 &x) {
  const auto &patches = field.spaces->topology().patches();
  for (int k = 0; k < static_cast<int>(patches.size()); ++k) {
    Vec2 xh;
    if (!patches[k].mapping.invert(x, xh)) continue;
    const Vec2 f = patches[k].mapping.map(xh);
    if (std::hypot(f[0] - x[0], f[1] - x[1]) > 1e-9) continue;
    return evaluate_field(field, k, xh);
  }
  throw ValidationError("point lies outside every patch");
}

} // namespace mpfeec
