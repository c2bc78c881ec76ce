// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_GEOMETRY_TOPOLOGY_HPP
#define MPFEEC_GEOMETRY_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "mpfeec/geometry/mapping.hpp"
#include "mpfeec/splines/knots.hpp"

namespace mpfeec {

/// Logical sides of a patch. West/East are the faces x1 = 0/1 parametrized by
/// x2; South/North are x2 = 0/1 parametrized by x1.
enum Side : int { West = 0, East = 1, South = 2, North = 3 };

inline int side_par_dir(int side) { return side <= East ? 1 : 0; }
inline int side_perp_dir(int side) { return side <= East ? 0 : 1; }
inline bool side_at_upper_end(int side) { return side == East || side == North; }

/// Patch geometry plus per-direction cell counts (pre-discretization).
struct PatchGeometry {
  PatchMapping mapping;
  std::array<int, 2> cells{4, 4};
};

struct DomainSpec {
  std::string name;
  std::vector<PatchGeometry> patches;
};

/// Discretized patch: mapping plus per-direction knot vectors.
struct PatchSpec {
  PatchMapping mapping;
  std::array<KnotVector, 2> knots;
};

struct EdgeSide {
  int patch = -1;
  int side = -1;
  bool par_reversed = false; // side runs opposite to the canonical edge param
};

struct Edge {
  int id = -1;
  bool boundary = false;
  EdgeSide coarse; // the only side for boundary edges
  EdgeSide fine;   // interior edges only
  int vertex_start = -1; // vertex at canonical parameter 0
  int vertex_end = -1;   // vertex at canonical parameter 1
};

struct Vertex {
  int id = -1;
  Vec2 position{0, 0};
  bool boundary = false;
  struct Corner {
    int patch;
    int corner; // bit 0: at x1 = 1, bit 1: at x2 = 1
  };
  std::vector<Corner> corners;
};

/// Per-patch index roles for one edge, resolving the "perpendicular index 0 on
/// the edge" ordering convention.
struct EdgeFrame {
  struct PatchFrame {
    int patch = -1;
    int par_dir = 0;
    int perp_dir = 1;
    bool perp_at_upper_end = false; // edge sits at index n of the perp space
    bool par_reversed = false;
  };
  PatchFrame coarse, fine;
};

class MultipatchTopology {
public:
  /// Discretize a domain spec with uniform per-patch knot vectors of the
  /// given degree, then detect edges, orientations and vertices.
  static MultipatchTopology build(const DomainSpec &spec, int degree);
  static MultipatchTopology build(std::vector<PatchSpec> patches,
                                  std::string name = "custom");

  const std::string &name() const { return name_; }
  const std::vector<PatchSpec> &patches() const { return patches_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Vertex> &vertices() const { return vertices_; }
  int degree() const { return degree_; }

  int interior_edge_count() const;
  int boundary_edge_count() const;

  Vec2 side_point(int patch, int side, double t) const;
  Vec2 corner_point(int patch, int corner) const;

  /// The patch's 1D knot vector along the given direction.
  const KnotVector &patch_knots(int patch, int dir) const {
    return patches_[patch].knots[dir];
  }

private:
  std::string name_;
  int degree_ = 0;
  std::vector<PatchSpec> patches_;
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;

  void detect_edges();
  void detect_vertices();
};

/// Index roles for an interior edge. Throws ValidationError on boundary edges.
EdgeFrame edge_local_frame(const MultipatchTopology &topo, const Edge &edge);

} // namespace mpfeec

#endif
