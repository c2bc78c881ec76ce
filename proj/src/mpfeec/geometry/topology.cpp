// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/geometry/topology.hpp"

#include <cmath>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

constexpr int kSidePoints = 50;
constexpr double kMatchTol = 1e-10;
constexpr double kVertexTol = 1e-8;

double dist(const Vec2 &a, const Vec2 &b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

} // namespace

MultipatchTopology MultipatchTopology::build(const DomainSpec &spec,
                                             int degree) {
  MPFEEC_REQUIRE(degree >= 1, "degree must be at least 1");
  std::vector<PatchSpec> patches;
  patches.reserve(spec.patches.size());
  for (const PatchGeometry &g : spec.patches) {
    PatchSpec p{g.mapping,
                {KnotVector::uniform(degree, g.cells[0]),
                 KnotVector::uniform(degree, g.cells[1])}};
    patches.push_back(std::move(p));
  }
  return build(std::move(patches), spec.name);
}

MultipatchTopology MultipatchTopology::build(std::vector<PatchSpec> patches,
                                             std::string name) {
  MPFEEC_REQUIRE(!patches.empty(), "domain needs at least one patch");
  for (const PatchSpec &p : patches) {
    MPFEEC_REQUIRE(p.knots[0].degree() == patches[0].knots[0].degree() &&
                       p.knots[1].degree() == patches[0].knots[0].degree(),
                   "all patches must share one spline degree");
  }
  MultipatchTopology topo;
  topo.name_ = std::move(name);
  topo.degree_ = patches[0].knots[0].degree();
  topo.patches_ = std::move(patches);
  topo.detect_edges();
  topo.detect_vertices();
  return topo;
}

Vec2 MultipatchTopology::side_point(int patch, int side, double t) const {
  Vec2 xh{};
  switch (side) {
  case West: xh = {0.0, t}; break;
  case East: xh = {1.0, t}; break;
  case South: xh = {t, 0.0}; break;
  default: xh = {t, 1.0}; break;
  }
  return patches_[patch].mapping.map(xh);
}

Vec2 MultipatchTopology::corner_point(int patch, int corner) const {
  const Vec2 xh{corner & 1 ? 1.0 : 0.0, corner & 2 ? 1.0 : 0.0};
  return patches_[patch].mapping.map(xh);
}

int MultipatchTopology::interior_edge_count() const {
  int n = 0;
  for (const Edge &e : edges_)
    if (!e.boundary) ++n;
  return n;
}

int MultipatchTopology::boundary_edge_count() const {
  return static_cast<int>(edges_.size()) - interior_edge_count();
}

void MultipatchTopology::detect_edges() {
  const int np = static_cast<int>(patches_.size());
  struct Samples {
    std::vector<Vec2> pts;
  };
  std::vector<std::array<Samples, 4>> samples(np);
  for (int k = 0; k < np; ++k)
    for (int s = 0; s < 4; ++s) {
      samples[k][s].pts.resize(kSidePoints);
      for (int i = 0; i < kSidePoints; ++i)
        samples[k][s].pts[i] =
            side_point(k, s, static_cast<double>(i) / (kSidePoints - 1));
    }

  auto match = [&](int ka, int sa, int kb, int sb, bool &reversed) {
    const auto &a = samples[ka][sa].pts;
    const auto &b = samples[kb][sb].pts;
    bool fwd = true, rev = true;
    for (int i = 0; i < kSidePoints && (fwd || rev); ++i) {
      if (dist(a[i], b[i]) > kMatchTol) fwd = false;
      if (dist(a[i], b[kSidePoints - 1 - i]) > kMatchTol) rev = false;
    }
    if (!fwd && !rev) {
      // Sides sharing both endpoints must coincide as point sets; anything
      // else is a geometrically non-conforming interface.
      const auto &af = a.front();
      const auto &ab = a.back();
      const bool ends_fwd = dist(af, b.front()) <= kMatchTol &&
                            dist(ab, b.back()) <= kMatchTol;
      const bool ends_rev = dist(af, b.back()) <= kMatchTol &&
                            dist(ab, b.front()) <= kMatchTol;
      if (ends_fwd || ends_rev)
        throw GeometryError("non-conforming interface between patches " +
                            std::to_string(ka) + " and " + std::to_string(kb));
      return false;
    }
    reversed = !fwd;
    return true;
  };

  std::vector<std::array<int, 4>> partner(np, {-1, -1, -1, -1});
  edges_.clear();
  for (int ka = 0; ka < np; ++ka) {
    for (int sa = 0; sa < 4; ++sa) {
      if (partner[ka][sa] != -1) continue;
      bool found = false;
      for (int kb = 0; kb < np && !found; ++kb) {
        if (kb == ka) continue;
        for (int sb = 0; sb < 4 && !found; ++sb) {
          if (partner[kb][sb] != -1) continue;
          bool reversed = false;
          if (!match(ka, sa, kb, sb, reversed)) continue;
          // Decide the coarse side by trace-space nestedness in a common
          // orientation.
          const KnotVector &kva = patches_[ka].knots[side_par_dir(sa)];
          KnotVector kvb = patches_[kb].knots[side_par_dir(sb)];
          if (reversed) kvb = kvb.reversed();
          Edge e;
          e.id = static_cast<int>(edges_.size());
          e.boundary = false;
          const bool a_in_b = kva.nested_in(kvb);
          const bool b_in_a = kvb.nested_in(kva);
          if (!a_in_b && !b_in_a)
            throw GeometryError("interface trace spaces not nested between "
                                "patches " + std::to_string(ka) + " and " +
                                std::to_string(kb));
          const bool a_coarse = a_in_b; // ties resolved toward the first patch
          e.coarse = {a_coarse ? ka : kb, a_coarse ? sa : sb, false};
          e.fine = {a_coarse ? kb : ka, a_coarse ? sb : sa, reversed};
          partner[ka][sa] = e.id;
          partner[kb][sb] = e.id;
          edges_.push_back(e);
          found = true;
        }
      }
      if (!found) {
        Edge e;
        e.id = static_cast<int>(edges_.size());
        e.boundary = true;
        e.coarse = {ka, sa, false};
        partner[ka][sa] = e.id;
        edges_.push_back(e);
      }
    }
  }
}

void MultipatchTopology::detect_vertices() {
  vertices_.clear();
  for (int k = 0; k < static_cast<int>(patches_.size()); ++k) {
    for (int c = 0; c < 4; ++c) {
      const Vec2 p = corner_point(k, c);
      Vertex *home = nullptr;
      for (Vertex &v : vertices_)
        if (dist(v.position, p) < kVertexTol) {
          home = &v;
          break;
        }
      if (!home) {
        Vertex v;
        v.id = static_cast<int>(vertices_.size());
        v.position = p;
        vertices_.push_back(v);
        home = &vertices_.back();
      }
      home->corners.push_back({k, c});
    }
  }

  // Edge endpoints in canonical (coarse-side) orientation.
  auto vertex_at = [&](const Vec2 &p) {
    for (Vertex &v : vertices_)
      if (dist(v.position, p) < kVertexTol) return v.id;
    throw GeometryError("edge endpoint does not coincide with any vertex");
  };
  for (Edge &e : edges_) {
    e.vertex_start = vertex_at(side_point(e.coarse.patch, e.coarse.side, 0.0));
    e.vertex_end = vertex_at(side_point(e.coarse.patch, e.coarse.side, 1.0));
  }
  for (const Edge &e : edges_) {
    if (!e.boundary) continue;
    vertices_[e.vertex_start].boundary = true;
    vertices_[e.vertex_end].boundary = true;
  }

  // Lipschitz-boundary consequence: a vertex shared by several patches must
  // sit on an interior edge of each sharing patch.
  for (const Vertex &v : vertices_) {
    if (v.corners.size() < 2) continue;
    for (const Vertex::Corner &c : v.corners) {
      bool on_interior_edge = false;
      for (const Edge &e : edges_) {
        if (e.boundary) continue;
        const bool touches =
            (e.coarse.patch == c.patch || e.fine.patch == c.patch) &&
            (e.vertex_start == v.id || e.vertex_end == v.id);
        if (touches) {
          on_interior_edge = true;
          break;
        }
      }
      if (!on_interior_edge)
        throw GeometryError("vertex shared by several patches does not lie on "
                            "an interior edge of patch " +
                            std::to_string(c.patch));
    }
  }
}

EdgeFrame edge_local_frame(const MultipatchTopology &topo, const Edge &edge) {
  MPFEEC_REQUIRE(!edge.boundary, "edge_local_frame requires an interior edge");
  (void)topo;
  EdgeFrame f;
  auto fill = [](const EdgeSide &s) {
    EdgeFrame::PatchFrame pf;
    pf.patch = s.patch;
    pf.par_dir = side_par_dir(s.side);
    pf.perp_dir = side_perp_dir(s.side);
    pf.perp_at_upper_end = side_at_upper_end(s.side);
    pf.par_reversed = s.par_reversed;
    return pf;
  };
  f.coarse = fill(edge.coarse);
  f.fine = fill(edge.fine);
  return f;
}

} // namespace mpfeec
