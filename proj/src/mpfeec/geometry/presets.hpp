// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_GEOMETRY_PRESETS_HPP
#define MPFEEC_GEOMETRY_PRESETS_HPP

#include <string>
#include <vector>

#include "mpfeec/geometry/topology.hpp"

namespace mpfeec {

struct PresetParams {
  int nx = 2;               // grid presets: patches per direction
  int ny = 2;
  int cells = 4;            // base cells per patch and direction
  int refine_factor = 2;    // dyadic factor applied to refined patches
  std::vector<int> refined_patches; // explicit patch ids, used when rule=="list"
  std::string refine_rule = "none"; // none | center | checkerboard | alternate
                                    // | middle | list
  double inner_radius = 0.5; // annulus presets
  double outer_radius = 1.0;
};

/// Named domain layouts:
///   unit-square-grid  nx x ny rectangles tiling [0,1]^2
///   square-pi-grid    nx x ny rectangles tiling [0,pi]^2
///   curved-L-shape    three annulus sections spanning a 3/4 annulus
///   L-corner-refined  curved-L-shape with the middle patch refined
///   checkerboard      nx x nx grid on [0,pi]^2, every other patch refined
///   three-patch       hexagon split into three bilinear quads around a
///                     common interior vertex
DomainSpec preset_domain(const std::string &name, PresetParams params = {});

/// Patch ids selected by a refinement rule on an nx x ny grid.
std::vector<int> rule_patches(const std::string &rule, int nx, int ny,
                              const std::vector<int> &explicit_list);

/// The same preset with every patch mapping replaced by a different one
/// (warped grid nodes, shifted radii) while keeping the knot layout, edge
/// orientations and adjacency identical. Used to check that conforming
/// projections are metric independent.
DomainSpec preset_domain_metric_variant(const std::string &name,
                                        PresetParams params = {});

} // namespace mpfeec

#endif
