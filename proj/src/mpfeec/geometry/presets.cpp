// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/geometry/presets.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

DomainSpec square_grid(const std::string &name, double side_length,
                       const PresetParams &p) {
  MPFEEC_REQUIRE(p.nx >= 1 && p.ny >= 1, "grid preset needs nx, ny >= 1");
  DomainSpec spec;
  spec.name = name;
  const double hx = side_length / p.nx, hy = side_length / p.ny;
  for (int j = 0; j < p.ny; ++j)
    for (int i = 0; i < p.nx; ++i) {
      PatchGeometry g;
      g.mapping = PatchMapping::rectangle(i * hx, j * hy, hx, hy);
      g.cells = {p.cells, p.cells};
      spec.patches.push_back(g);
    }
  for (int id : rule_patches(p.refine_rule, p.nx, p.ny, p.refined_patches)) {
    MPFEEC_REQUIRE(id >= 0 && id < static_cast<int>(spec.patches.size()),
                   "refined patch id out of range");
    spec.patches[id].cells = {p.cells * p.refine_factor,
                              p.cells * p.refine_factor};
  }
  return spec;
}

DomainSpec curved_l(const std::string &name, const PresetParams &p,
                    bool refine_middle) {
  DomainSpec spec;
  spec.name = name;
  // Three 90-degree annulus sections spanning a 3/4 annulus.
  for (int k = 0; k < 3; ++k) {
    PatchGeometry g;
    g.mapping = PatchMapping::annulus_section(
        {0.0, 0.0}, p.inner_radius, p.outer_radius, k * M_PI / 2,
        (k + 1) * M_PI / 2);
    g.cells = {p.cells, p.cells};
    spec.patches.push_back(g);
  }
  if (refine_middle)
    spec.patches[1].cells = {p.cells * p.refine_factor,
                             p.cells * p.refine_factor};
  for (int id : rule_patches(p.refine_rule, 3, 1, p.refined_patches)) {
    MPFEEC_REQUIRE(id >= 0 && id < 3, "refined patch id out of range");
    spec.patches[id].cells = {p.cells * p.refine_factor,
                              p.cells * p.refine_factor};
  }
  return spec;
}

DomainSpec three_patch(const PresetParams &p) {
  DomainSpec spec;
  spec.name = "three-patch";
  // Regular hexagon split into three bilinear rhombi that share the center.
  const Vec2 center{0.0, 0.0};
  auto hexv = [](int j) -> Vec2 {
    return {std::cos(j * M_PI / 3.0), std::sin(j * M_PI / 3.0)};
  };
  for (int k = 0; k < 3; ++k) {
    PatchGeometry g;
    g.mapping = PatchMapping::bilinear(center, hexv(2 * k), hexv(2 * k + 1),
                                       hexv(2 * k + 2));
    g.cells = {p.cells, p.cells};
    spec.patches.push_back(g);
  }
  for (int id : rule_patches(p.refine_rule, 3, 1, p.refined_patches)) {
    MPFEEC_REQUIRE(id >= 0 && id < 3, "refined patch id out of range");
    spec.patches[id].cells = {p.cells * p.refine_factor,
                              p.cells * p.refine_factor};
  }
  return spec;
}

} // namespace

std::vector<int> rule_patches(const std::string &rule, int nx, int ny,
                              const std::vector<int> &explicit_list) {
  if (rule == "none" || rule.empty()) return {};
  if (rule == "list") return explicit_list;
  std::vector<int> ids;
  if (rule == "center") {
    MPFEEC_REQUIRE(nx % 2 == 1 && ny % 2 == 1,
                   "center rule needs odd grid dimensions");
    ids.push_back((ny / 2) * nx + nx / 2);
  } else if (rule == "checkerboard") {
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if ((i + j) % 2 == 1) ids.push_back(j * nx + i);
  } else if (rule == "alternate") {
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if ((j * nx + i) % 2 == 1) ids.push_back(j * nx + i);
  } else if (rule == "middle") {
    ids.push_back(1); // three-patch layouts
  } else {
    throw ValidationError("unknown refinement rule: " + rule);
  }
  return ids;
}

namespace {

DomainSpec warped_grid(const std::string &name, double side_length,
                       const PresetParams &p,
                       const std::string &forced_rule = "") {
  PresetParams q = p;
  if (!forced_rule.empty()) {
    q.ny = q.nx;
    q.refine_rule = forced_rule;
  }
  MPFEEC_REQUIRE(q.nx >= 1 && q.ny >= 1, "grid preset needs nx, ny >= 1");
  // Deterministically perturbed interior grid nodes; patches become bilinear.
  const double hx = side_length / q.nx, hy = side_length / q.ny;
  const double amp = 0.12 * std::min(hx, hy);
  auto node = [&](int i, int j) -> Vec2 {
    Vec2 v{i * hx, j * hy};
    if (i > 0 && i < q.nx && j > 0 && j < q.ny) {
      v[0] += amp * std::sin(2.3 * i + 0.7 * j + 0.5);
      v[1] += amp * std::cos(1.7 * j + 1.3 * i);
    }
    return v;
  };
  DomainSpec spec;
  spec.name = name;
  for (int j = 0; j < q.ny; ++j)
    for (int i = 0; i < q.nx; ++i) {
      PatchGeometry g;
      g.mapping = PatchMapping::bilinear(node(i, j), node(i + 1, j),
                                         node(i + 1, j + 1), node(i, j + 1));
      g.cells = {q.cells, q.cells};
      spec.patches.push_back(g);
    }
  for (int id : rule_patches(q.refine_rule, q.nx, q.ny, q.refined_patches)) {
    MPFEEC_REQUIRE(id >= 0 && id < static_cast<int>(spec.patches.size()),
                   "refined patch id out of range");
    spec.patches[id].cells = {q.cells * q.refine_factor,
                              q.cells * q.refine_factor};
  }
  return spec;
}

} // namespace

DomainSpec preset_domain_metric_variant(const std::string &name,
                                        PresetParams params) {
  if (name == "unit-square-grid") return warped_grid(name, 1.0, params);
  if (name == "square-pi-grid") return warped_grid(name, M_PI, params);
  if (name == "checkerboard")
    return warped_grid(name, M_PI, params, "checkerboard");
  if (name == "curved-L-shape" || name == "L-corner-refined") {
    PresetParams q = params;
    q.inner_radius = 0.5 * (params.inner_radius + params.outer_radius);
    q.outer_radius = 2.0 * params.outer_radius;
    return curved_l(name, q, name == "L-corner-refined");
  }
  if (name == "three-patch") {
    // Stretch the hexagon anisotropically; adjacency and orientations are
    // unchanged.
    const DomainSpec spec = three_patch(params);
    DomainSpec out;
    out.name = spec.name;
    auto hexv = [](int j) -> Vec2 {
      return {1.9 * std::cos(j * M_PI / 3.0), 1.2 * std::sin(j * M_PI / 3.0)};
    };
    const Vec2 center{0.0, 0.0};
    for (int k = 0; k < 3; ++k) {
      PatchGeometry g;
      g.mapping = PatchMapping::bilinear(center, hexv(2 * k), hexv(2 * k + 1),
                                         hexv(2 * k + 2));
      g.cells = spec.patches[k].cells;
      out.patches.push_back(g);
    }
    return out;
  }
  throw ValidationError("unknown preset domain: " + name);
}

DomainSpec preset_domain(const std::string &name, PresetParams params) {
  if (name == "unit-square-grid") return square_grid(name, 1.0, params);
  if (name == "square-pi-grid") return square_grid(name, M_PI, params);
  if (name == "curved-L-shape") return curved_l(name, params, false);
  if (name == "L-corner-refined") return curved_l(name, params, true);
  if (name == "checkerboard") {
    params.ny = params.nx;
    params.refine_rule = "checkerboard";
    return square_grid(name, M_PI, params);
  }
  if (name == "three-patch") return three_patch(params);
  throw ValidationError("unknown preset domain: " + name);
}

} // namespace mpfeec
