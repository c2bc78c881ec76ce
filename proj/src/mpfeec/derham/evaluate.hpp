// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_DERHAM_EVALUATE_HPP
#define MPFEEC_DERHAM_EVALUATE_HPP

#include "mpfeec/derham/spaces.hpp"

namespace mpfeec {

/// Raw logical (pullback) value at a logical point of one patch: component 0
/// holds the scalar for levels 0 and 2; level 1 fills both components.
Vec2 evaluate_pullback(const DeRhamSpaces &spaces, int level,
                       std::span<const double> coeffs, int patch,
                       const Vec2 &xh);
Vec2 evaluate_field_pullback(const FemField &field, int patch, const Vec2 &xh);

/// Physical field value at the logical point xh of a patch, i.e. with the
/// pushforward applied: scalar for level 0, vector DF^{-T} u-hat for level 1,
/// density g-hat / J for level 2.
Vec2 evaluate_field(const FemField &field, int patch, const Vec2 &xh);

/// Physical-point evaluation: locates the owning patch by Newton inversion.
/// Throws ValidationError when the point lies outside all patches.
Vec2 evaluate_field_physical(const FemField &field, const Vec2 &x);

} // namespace mpfeec

#endif
