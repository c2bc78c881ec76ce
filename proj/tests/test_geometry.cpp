// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/geometry/presets.hpp"
#include "mpfeec/geometry/topology.hpp"

using namespace mpfeec;

namespace {

// Two unit squares glued along x = 1, the right patch parametrized upside
// down: exercises orientation detection.
std::vector<PatchSpec> flipped_pair(int degree, int cells_left,
                                    int cells_right) {
  std::vector<PatchSpec> patches(2);
  patches[0].mapping = PatchMapping::rectangle(0, 0, 1, 1);
  patches[0].knots = {KnotVector::uniform(degree, cells_left),
                      KnotVector::uniform(degree, cells_left)};
  patches[1].mapping = PatchMapping::affine({-1, 0, 0, -1}, {2, 1});
  patches[1].knots = {KnotVector::uniform(degree, cells_right),
                      KnotVector::uniform(degree, cells_right)};
  return patches;
}

} // namespace

TEST_CASE("patch mappings") {
  SUBCASE("jacobians stay positive and invert round-trips") {
    const PatchMapping maps[] = {
        PatchMapping::rectangle(0.5, -1.0, 2.0, 3.0),
        PatchMapping::bilinear({0, 0}, {1.2, 0.1}, {1.0, 1.3}, {-0.2, 0.9}),
        PatchMapping::annulus_section({0, 0}, 0.5, 1.0, 0.0, M_PI / 2)};
    for (const auto &m : maps) {
      for (double s : {0.1, 0.5, 0.9}) {
        for (double t : {0.2, 0.7}) {
          const Vec2 xh{s, t};
          CHECK(m.jacobian_det(xh) > 0.0);
          Vec2 back;
          REQUIRE(m.invert(m.map(xh), back));
          CHECK(back[0] == doctest::Approx(s).epsilon(1e-9));
          CHECK(back[1] == doctest::Approx(t).epsilon(1e-9));
        }
      }
    }
  }
  SUBCASE("degenerate quads are rejected") {
    CHECK_THROWS_AS(PatchMapping::bilinear({0, 0}, {1, 0}, {0.1, 0.1}, {0, 1}),
                    GeometryError);
  }
}

TEST_CASE("topology of a 2x2 grid") {
  PresetParams params;
  params.nx = params.ny = 2;
  params.cells = 4;
  const MultipatchTopology topo =
      MultipatchTopology::build(preset_domain("unit-square-grid", params), 2);
  CHECK(topo.interior_edge_count() == 4);
  CHECK(topo.boundary_edge_count() == 8);
  CHECK(topo.vertices().size() == 9);
  int four_patch_vertices = 0, boundary_vertices = 0;
  for (const Vertex &v : topo.vertices()) {
    if (v.corners.size() == 4) {
      ++four_patch_vertices;
      CHECK(!v.boundary);
    }
    if (v.boundary) ++boundary_vertices;
  }
  CHECK(four_patch_vertices == 1);
  CHECK(boundary_vertices == 8);
}

TEST_CASE("topology of a single patch") {
  DomainSpec spec;
  spec.name = "one";
  spec.patches.push_back({PatchMapping::rectangle(0, 0, 1, 1), {3, 3}});
  const MultipatchTopology topo = MultipatchTopology::build(spec, 2);
  CHECK(topo.interior_edge_count() == 0);
  CHECK(topo.boundary_edge_count() == 4);
  CHECK(topo.vertices().size() == 4);
  for (const Vertex &v : topo.vertices()) CHECK(v.boundary);
}

TEST_CASE("curved L-shape has two interior edges") {
  PresetParams params;
  params.cells = 4;
  const MultipatchTopology topo =
      MultipatchTopology::build(preset_domain("curved-L-shape", params), 2);
  CHECK(topo.patches().size() == 3);
  CHECK(topo.interior_edge_count() == 2);
  CHECK(topo.boundary_edge_count() == 8);
  for (const Vertex &v : topo.vertices()) CHECK(v.boundary);
}

TEST_CASE("three-patch hexagon shares one interior vertex") {
  PresetParams params;
  params.cells = 4;
  const MultipatchTopology topo =
      MultipatchTopology::build(preset_domain("three-patch", params), 2);
  CHECK(topo.patches().size() == 3);
  CHECK(topo.interior_edge_count() == 3);
  int interior_vertices = 0;
  for (const Vertex &v : topo.vertices())
    if (!v.boundary) {
      ++interior_vertices;
      CHECK(v.corners.size() == 3);
    }
  CHECK(interior_vertices == 1);
}

TEST_CASE("preset refinement layouts") {
  SUBCASE("3x3 grid with refined center") {
    PresetParams params;
    params.nx = params.ny = 3;
    params.cells = 4;
    params.refine_rule = "center";
    const DomainSpec spec = preset_domain("unit-square-grid", params);
    REQUIRE(spec.patches.size() == 9);
    for (int k = 0; k < 9; ++k)
      CHECK(spec.patches[k].cells[0] == (k == 4 ? 8 : 4));
  }
  SUBCASE("checkerboard alternates refinement") {
    PresetParams params;
    params.nx = 4;
    params.cells = 2;
    const DomainSpec spec = preset_domain("checkerboard", params);
    REQUIRE(spec.patches.size() == 16);
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        CHECK(spec.patches[j * 4 + i].cells[0] == ((i + j) % 2 ? 4 : 2));
  }
  SUBCASE("pi-square is uniform") {
    PresetParams params;
    params.nx = params.ny = 2;
    params.cells = 3;
    const DomainSpec spec = preset_domain("square-pi-grid", params);
    const MultipatchTopology topo = MultipatchTopology::build(spec, 2);
    Vec2 far{0, 0};
    for (const Vertex &v : topo.vertices()) {
      far[0] = std::max(far[0], v.position[0]);
      far[1] = std::max(far[1], v.position[1]);
    }
    CHECK(far[0] == doctest::Approx(M_PI));
    CHECK(far[1] == doctest::Approx(M_PI));
    for (const auto &p : spec.patches) CHECK(p.cells[0] == 3);
  }
  SUBCASE("unknown preset is rejected") {
    CHECK_THROWS_AS((void)preset_domain("dodecahedron"), ValidationError);
  }
}

TEST_CASE("edge frames") {
  PresetParams params;
  params.nx = 1;
  params.ny = 2;
  params.cells = 3;
  const MultipatchTopology topo =
      MultipatchTopology::build(preset_domain("unit-square-grid", params), 2);
  REQUIRE(topo.interior_edge_count() == 1);
  const Edge *horizontal = nullptr;
  for (const Edge &e : topo.edges())
    if (!e.boundary) horizontal = &e;
  REQUIRE(horizontal);
  const EdgeFrame f = edge_local_frame(topo, *horizontal);
  // stacked patches meet along a horizontal edge: parallel is x1,
  // perpendicular is x2, no reversal for plain translations
  CHECK(f.coarse.par_dir == 0);
  CHECK(f.coarse.perp_dir == 1);
  CHECK(f.fine.par_dir == 0);
  CHECK(!f.fine.par_reversed);
  CHECK(f.coarse.perp_at_upper_end != f.fine.perp_at_upper_end);

  PresetParams pv;
  pv.nx = 2;
  pv.ny = 1;
  pv.cells = 3;
  const MultipatchTopology tv =
      MultipatchTopology::build(preset_domain("unit-square-grid", pv), 2);
  for (const Edge &e : tv.edges())
    if (!e.boundary) {
      const EdgeFrame g = edge_local_frame(tv, e);
      CHECK(g.coarse.par_dir == 1);
      CHECK(g.coarse.perp_dir == 0);
    }
  const Edge *bnd = nullptr;
  for (const Edge &e : tv.edges())
    if (e.boundary) bnd = &e;
  CHECK_THROWS_AS((void)edge_local_frame(tv, *bnd), ValidationError);
}

TEST_CASE("opposed parametrizations set the reversal flag") {
  const MultipatchTopology topo =
      MultipatchTopology::build(flipped_pair(2, 3, 3), "flipped");
  REQUIRE(topo.interior_edge_count() == 1);
  for (const Edge &e : topo.edges()) {
    if (e.boundary) continue;
    CHECK(e.fine.par_reversed);
    // point-set sampling oracle: canonical param t on the coarse side must
    // land on the same physical point as 1-t on the fine side
    for (int i = 0; i <= 50; ++i) {
      const double t = i / 50.0;
      const Vec2 a = topo.side_point(e.coarse.patch, e.coarse.side, t);
      const Vec2 b = topo.side_point(e.fine.patch, e.fine.side, 1.0 - t);
      CHECK(std::hypot(a[0] - b[0], a[1] - b[1]) <= 1e-10);
    }
  }
}

TEST_CASE("interior edges agree pointwise for every preset") {
  const char *names[] = {"unit-square-grid", "square-pi-grid", "curved-L-shape",
                         "L-corner-refined", "checkerboard", "three-patch"};
  for (const char *name : names) {
    PresetParams params;
    params.nx = params.ny = 3;
    params.cells = 3;
    params.refine_rule = std::string(name) == "unit-square-grid" ? "center"
                                                                 : "none";
    const MultipatchTopology topo =
        MultipatchTopology::build(preset_domain(name, params), 2);
    for (const Edge &e : topo.edges()) {
      if (e.boundary) continue;
      for (int i = 0; i <= 50; ++i) {
        const double t = i / 50.0;
        const double tf = e.fine.par_reversed ? 1.0 - t : t;
        const Vec2 a = topo.side_point(e.coarse.patch, e.coarse.side, t);
        const Vec2 b = topo.side_point(e.fine.patch, e.fine.side, tf);
        CHECK(std::hypot(a[0] - b[0], a[1] - b[1]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("non-conforming interfaces are reported with the patch pair") {
  // the second patch's side shares the first one's east-edge endpoints but
  // bows along a circular arc, so the point sets differ
  std::vector<PatchSpec> patches(2);
  patches[0].mapping = PatchMapping::rectangle(0, 0, 1, 1);
  patches[0].knots = {KnotVector::uniform(2, 3), KnotVector::uniform(2, 3)};
  const double half = std::atan2(0.5, 2.0);
  const double radius = std::hypot(2.0, 0.5);
  patches[1].mapping = PatchMapping::annulus_section(
      {3.0, 0.5}, radius, radius + 1.0, M_PI - half, M_PI + half);
  patches[1].knots = {KnotVector::uniform(2, 3), KnotVector::uniform(2, 3)};
  bool thrown = false;
  try {
    (void)MultipatchTopology::build(std::move(patches));
  } catch (const GeometryError &err) {
    thrown = true;
    CHECK(std::string(err.what()).find("patches 0 and 1") != std::string::npos);
  }
  CHECK(thrown);
}

TEST_CASE("non-nested interfaces are reported") {
  std::vector<PatchSpec> patches(2);
  patches[0].mapping = PatchMapping::rectangle(0, 0, 1, 1);
  patches[0].knots = {KnotVector::uniform(2, 3), KnotVector::uniform(2, 3)};
  patches[1].mapping = PatchMapping::rectangle(1, 0, 1, 1);
  patches[1].knots = {KnotVector::uniform(2, 4), KnotVector::uniform(2, 4)};
  CHECK_THROWS_AS((void)MultipatchTopology::build(std::move(patches)),
                  GeometryError);
}
