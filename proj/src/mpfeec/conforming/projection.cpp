// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/conforming/projection.hpp"

#include <algorithm>
#include <map>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

// Sparse factor that differs from the identity in a few columns.
class ColumnFactor {
public:
  explicit ColumnFactor(index_t n) : n_(n) {}

  void set(index_t col, index_t row, double v) {
    if (v != 0.0) cols_[col].emplace_back(row, v);
    else cols_.try_emplace(col); // mark column as replaced even if empty
  }
  void touch(index_t col) { cols_.try_emplace(col); }

  SparseMatrix build() const {
    TripletBuffer buf(n_, n_);
    for (index_t j = 0; j < n_; ++j) {
      auto it = cols_.find(j);
      if (it == cols_.end()) {
        buf.add(j, j, 1.0);
      } else {
        for (const auto &[row, v] : it->second) buf.add(row, j, v);
      }
    }
    return buf.build();
  }

private:
  index_t n_;
  std::map<index_t, std::vector<std::pair<index_t, double>>> cols_;
};

// Index bookkeeping for one side of an edge in the scalar space: canonical
// parallel index + perpendicular layer -> global V0 DOF.
struct SideMap0 {
  const DeRhamSpaces *sp;
  int patch;
  int par_dir, perp_dir;
  int npar;  // primal parallel dim - 1
  int nperp; // primal perpendicular dim - 1
  bool par_reversed, perp_at_end;

  SideMap0(const DeRhamSpaces &spaces, const EdgeFrame::PatchFrame &f)
      : sp(&spaces), patch(f.patch), par_dir(f.par_dir), perp_dir(f.perp_dir),
        npar(spaces.patch(f.patch).pdim[f.par_dir] - 1),
        nperp(spaces.patch(f.patch).pdim[f.perp_dir] - 1),
        par_reversed(f.par_reversed), perp_at_end(f.perp_at_upper_end) {}

  int par(int i) const { return par_reversed ? npar - i : i; }
  int perp(int m) const { return perp_at_end ? nperp - m : m; }
  index_t idx(int i, int m) const {
    const int a = par(i), b = perp(m);
    return par_dir == 0 ? sp->idx0(patch, a, b) : sp->idx0(patch, b, a);
  }
};

// Same for the tangential block of V1: the parallel factor lives in the
// derived space, the perpendicular factor in the primal one. Reversal flips
// the coefficient sign.
struct SideMap1 {
  const DeRhamSpaces *sp;
  int patch;
  int par_dir, perp_dir, comp;
  int npar1; // derived parallel dim
  int nperp; // primal perpendicular dim - 1
  bool par_reversed, perp_at_end;

  SideMap1(const DeRhamSpaces &spaces, const EdgeFrame::PatchFrame &f)
      : sp(&spaces), patch(f.patch), par_dir(f.par_dir), perp_dir(f.perp_dir),
        comp(f.par_dir + 1),
        npar1(spaces.patch(f.patch).ddim[f.par_dir]),
        nperp(spaces.patch(f.patch).pdim[f.perp_dir] - 1),
        par_reversed(f.par_reversed), perp_at_end(f.perp_at_upper_end) {}

  int par(int i) const { return par_reversed ? npar1 - 1 - i : i; }
  int perp(int m) const { return perp_at_end ? nperp - m : m; }
  double sign() const { return par_reversed ? -1.0 : 1.0; }
  index_t idx(int i, int m) const {
    const int a = par(i), b = perp(m);
    return par_dir == 0 ? sp->idx1(patch, comp, a, b)
                        : sp->idx1(patch, comp, b, a);
  }
};

std::vector<double> patch_dir_gamma(const DeRhamSpaces &sp, int patch, int dir,
                                    int end, int r) {
  return end_gamma(sp.patch(patch).primal[dir], end, r);
}

} // namespace

SparseMatrix vertex_projection_factor(const DeRhamSpaces &spaces,
                                      const Vertex &vertex, int r,
                                      BoundaryCondition bc) {
  ColumnFactor factor(spaces.dim(0));
  const bool homogeneous =
      bc == BoundaryCondition::Homogeneous && vertex.boundary;
  const int num = static_cast<int>(vertex.corners.size());
  if (!homogeneous && num < 2) return factor.build();

  struct CornerData {
    int patch;
    std::array<int, 2> base, step;
    std::array<std::vector<double>, 2> gamma;
  };
  std::vector<CornerData> corners;
  for (const Vertex::Corner &c : vertex.corners) {
    CornerData cd;
    cd.patch = c.patch;
    for (int d = 0; d < 2; ++d) {
      const bool at_end = (c.corner >> d) & 1;
      const int n = spaces.patch(c.patch).pdim[d] - 1;
      MPFEEC_REQUIRE(r <= n - 1, "moment order too large for the patch "
                                 "resolution at a vertex");
      cd.base[d] = at_end ? n : 0;
      cd.step[d] = at_end ? -1 : 1;
      cd.gamma[d] = patch_dir_gamma(spaces, c.patch, d, at_end ? 1 : 0, r);
    }
    corners.push_back(std::move(cd));
  }

  for (const CornerData &home : corners) {
    const index_t col = spaces.idx0(home.patch, home.base[0], home.base[1]);
    if (homogeneous) {
      for (int m1 = 1; m1 <= r; ++m1)
        for (int m2 = 1; m2 <= r; ++m2)
          factor.set(col,
                     spaces.idx0(home.patch, home.base[0] + home.step[0] * m1,
                                 home.base[1] + home.step[1] * m2),
                     home.gamma[0][m1 - 1] * home.gamma[1][m2 - 1]);
      factor.touch(col);
      continue;
    }
    const double avg = 1.0 / num;
    for (const CornerData &other : corners) {
      factor.set(col, spaces.idx0(other.patch, other.base[0], other.base[1]),
                 avg);
      const double weight = (&other == &home) ? 1.0 - avg : -avg;
      for (int m1 = 1; m1 <= r; ++m1)
        for (int m2 = 1; m2 <= r; ++m2)
          factor.set(col,
                     spaces.idx0(other.patch, other.base[0] + other.step[0] * m1,
                                 other.base[1] + other.step[1] * m2),
                     weight * other.gamma[0][m1 - 1] * other.gamma[1][m2 - 1]);
    }
  }
  return factor.build();
}

SparseMatrix edge_projection_factor_v0(const DeRhamSpaces &spaces,
                                       const Edge &edge,
                                       const InterfaceOperators *io, int r,
                                       BoundaryCondition bc) {
  ColumnFactor factor(spaces.dim(0));
  const MultipatchTopology &topo = spaces.topology();

  if (edge.boundary) {
    if (bc != BoundaryCondition::Homogeneous) return factor.build();
    // The adjacent patch plays the coarse role; the trace is zeroed and its
    // moments are moved to the first r interior layers.
    EdgeFrame::PatchFrame f;
    f.patch = edge.coarse.patch;
    f.par_dir = side_par_dir(edge.coarse.side);
    f.perp_dir = side_perp_dir(edge.coarse.side);
    f.perp_at_upper_end = side_at_upper_end(edge.coarse.side);
    f.par_reversed = false;
    const SideMap0 s(spaces, f);
    const UnivariateSpace par_space(topo.patch_knots(f.patch, f.par_dir));
    const UnivariateSpace perp_space(topo.patch_knots(f.patch, f.perp_dir));
    const auto gperp = end_gamma(perp_space, f.perp_at_upper_end ? 1 : 0, r);
    const std::array<std::vector<double>, 2> gpar{end_gamma(par_space, 0, r),
                                                  end_gamma(par_space, 1, r)};
    for (int j = 0; j <= s.npar; ++j) {
      const index_t col = s.idx(j, 0);
      factor.touch(col);
      if (j > 0 && j < s.npar) {
        for (int m = 1; m <= r; ++m) factor.set(col, s.idx(j, m), gperp[m - 1]);
      } else {
        const int slot = j == 0 ? 0 : 1;
        for (int mp = 1; mp <= r; ++mp) {
          const int i = slot == 0 ? mp : s.npar - mp;
          for (int m = 1; m <= r; ++m)
            factor.set(col, s.idx(i, m), gperp[m - 1] * gpar[slot][mp - 1]);
        }
      }
    }
    return factor.build();
  }

  MPFEEC_REQUIRE(io != nullptr && io->edge_id == edge.id && io->order == r,
                 "edge factor requires matching interface operators");
  const EdgeFrame frame = edge_local_frame(topo, edge);
  const SideMap0 sc(spaces, frame.coarse);
  const SideMap0 sf(spaces, frame.fine);
  const int nc = sc.npar, nf = sf.npar;
  const DenseMatrix &E = io->ext0;
  const DenseMatrix &R = io->res0;
  const DenseMatrix ER = E * R;
  const auto &gc = io->gamma_perp_coarse;
  const auto &gf = io->gamma_perp_fine;

  // Coarse-side columns.
  for (int j = 0; j <= nc; ++j) {
    const index_t col = sc.idx(j, 0);
    factor.set(col, sc.idx(j, 0), 0.5);
    for (int i = 0; i <= nf; ++i)
      factor.set(col, sf.idx(i, 0), 0.5 * E(i, j));
    if (j > 0 && j < nc) {
      for (int m = 1; m <= r; ++m) {
        factor.set(col, sc.idx(j, m), 0.5 * gc[m - 1]);
        for (int i = 0; i <= nf; ++i)
          factor.set(col, sf.idx(i, m), -0.5 * gf[m - 1] * E(i, j));
      }
    } else {
      const int slot = j == 0 ? 0 : 1;
      const auto &mum = io->mu_minus[slot];
      std::vector<double> emum = E.apply(mum);
      for (int m = 1; m <= r; ++m) {
        for (int i = 0; i <= nc; ++i)
          factor.set(col, sc.idx(i, m), 0.5 * gc[m - 1] * mum[i]);
        for (int i = 0; i <= nf; ++i)
          factor.set(col, sf.idx(i, m), -0.5 * gf[m - 1] * emum[i]);
      }
    }
  }
  // Fine-side columns.
  for (int j = 0; j <= nf; ++j) {
    const index_t col = sf.idx(j, 0);
    factor.touch(col);
    for (int i = 0; i <= nc; ++i)
      factor.set(col, sc.idx(i, 0), 0.5 * R(i, j));
    for (int l = 0; l <= nf; ++l)
      factor.set(col, sf.idx(l, 0), 0.5 * ER(l, j));
    if (j > 0 && j < nf) {
      for (int m = 1; m <= r; ++m) {
        for (int i = 0; i <= nc; ++i)
          factor.set(col, sc.idx(i, m), -0.5 * gc[m - 1] * R(i, j));
        for (int l = 0; l <= nf; ++l)
          factor.set(col, sf.idx(l, m), 0.5 * gf[m - 1] * ER(l, j));
      }
    } else {
      const int slot = j == 0 ? 0 : 1;
      const std::vector<double> z = R.apply(io->mu_plus[slot]);
      const std::vector<double> ez = E.apply(z);
      for (int m = 1; m <= r; ++m) {
        for (int i = 0; i <= nc; ++i)
          factor.set(col, sc.idx(i, m), -0.5 * gc[m - 1] * z[i]);
        for (int l = 0; l <= nf; ++l)
          factor.set(col, sf.idx(l, m), 0.5 * gf[m - 1] * ez[l]);
      }
    }
  }
  return factor.build();
}

SparseMatrix edge_projection_factor_v1(const DeRhamSpaces &spaces,
                                       const Edge &edge,
                                       const InterfaceOperators *io, int r,
                                       BoundaryCondition bc) {
  ColumnFactor factor(spaces.dim(1));
  const MultipatchTopology &topo = spaces.topology();

  if (edge.boundary) {
    if (bc != BoundaryCondition::Homogeneous) return factor.build();
    EdgeFrame::PatchFrame f;
    f.patch = edge.coarse.patch;
    f.par_dir = side_par_dir(edge.coarse.side);
    f.perp_dir = side_perp_dir(edge.coarse.side);
    f.perp_at_upper_end = side_at_upper_end(edge.coarse.side);
    f.par_reversed = false;
    const SideMap1 s(spaces, f);
    const UnivariateSpace perp_space(topo.patch_knots(f.patch, f.perp_dir));
    const auto gperp = end_gamma(perp_space, f.perp_at_upper_end ? 1 : 0, r);
    for (int j = 0; j < s.npar1; ++j) {
      const index_t col = s.idx(j, 0);
      factor.touch(col);
      for (int m = 1; m <= r; ++m) factor.set(col, s.idx(j, m), gperp[m - 1]);
    }
    return factor.build();
  }

  MPFEEC_REQUIRE(io != nullptr && io->edge_id == edge.id,
                 "edge factor requires matching interface operators");
  const EdgeFrame frame = edge_local_frame(topo, edge);
  const SideMap1 sc(spaces, frame.coarse);
  const SideMap1 sf(spaces, frame.fine);
  const int nc1 = sc.npar1, nf1 = sf.npar1;
  const DenseMatrix &E = io->ext1;
  const DenseMatrix &R = io->res1;
  const DenseMatrix ER = E * R;
  const auto &gc = io->gamma_perp_coarse;
  const auto &gf = io->gamma_perp_fine;
  const double sgn = sf.sign();

  for (int j = 0; j < nc1; ++j) {
    const index_t col = sc.idx(j, 0);
    factor.set(col, sc.idx(j, 0), 0.5);
    for (int m = 1; m <= r; ++m) factor.set(col, sc.idx(j, m), 0.5 * gc[m - 1]);
    for (int i = 0; i < nf1; ++i) {
      factor.set(col, sf.idx(i, 0), 0.5 * sgn * E(i, j));
      for (int m = 1; m <= r; ++m)
        factor.set(col, sf.idx(i, m), -0.5 * sgn * gf[m - 1] * E(i, j));
    }
  }
  for (int j = 0; j < nf1; ++j) {
    const index_t col = sf.idx(j, 0);
    factor.touch(col);
    for (int i = 0; i < nc1; ++i) {
      factor.set(col, sc.idx(i, 0), 0.5 * sgn * R(i, j));
      for (int m = 1; m <= r; ++m)
        factor.set(col, sc.idx(i, m), -0.5 * sgn * gc[m - 1] * R(i, j));
    }
    for (int l = 0; l < nf1; ++l) {
      factor.set(col, sf.idx(l, 0), 0.5 * ER(l, j));
      for (int m = 1; m <= r; ++m)
        factor.set(col, sf.idx(l, m), 0.5 * gf[m - 1] * ER(l, j));
    }
  }
  return factor.build();
}

ConformingProjection assemble_conforming_projection(
    std::shared_ptr<const DeRhamSpaces> spaces, int level, int r,
    BoundaryCondition bc, bool reversed_factor_order) {
  MPFEEC_REQUIRE(level == 0 || level == 1,
                 "conforming projection exists for levels 0 and 1");
  const int p = spaces->degree();
  if (level == 0)
    MPFEEC_REQUIRE(r >= 0 && r <= p + 1, "level 0 requires 0 <= r <= p+1");
  else
    MPFEEC_REQUIRE(r >= 0 && r <= p, "level 1 requires 0 <= r <= p");

  const MultipatchTopology &topo = spaces->topology();
  std::vector<SparseMatrix> vertex_factors, edge_factors;

  if (level == 0)
    for (const Vertex &v : topo.vertices())
      vertex_factors.push_back(vertex_projection_factor(*spaces, v, r, bc));

  for (const Edge &e : topo.edges()) {
    if (e.boundary) {
      if (bc == BoundaryCondition::Homogeneous)
        edge_factors.push_back(
            level == 0 ? edge_projection_factor_v0(*spaces, e, nullptr, r, bc)
                       : edge_projection_factor_v1(*spaces, e, nullptr, r, bc));
      continue;
    }
    const InterfaceOperators io = build_interface_operators(topo, e, r);
    edge_factors.push_back(level == 0
                               ? edge_projection_factor_v0(*spaces, e, &io, r, bc)
                               : edge_projection_factor_v1(*spaces, e, &io, r, bc));
  }

  // Vertex factors apply first, then edge factors. reversed_factor_order
  // flips the order inside each group (the scope of the commutation
  // properties); the group order itself is part of the construction.
  if (reversed_factor_order) {
    std::reverse(vertex_factors.begin(), vertex_factors.end());
    std::reverse(edge_factors.begin(), edge_factors.end());
  }
  ConformingProjection proj;
  proj.level = level;
  proj.order = r;
  proj.bc = bc;
  proj.matrix = SparseMatrix::identity(spaces->dim(level));
  for (const SparseMatrix &f : vertex_factors)
    proj.matrix = multiply(f, proj.matrix);
  for (const SparseMatrix &f : edge_factors)
    proj.matrix = multiply(f, proj.matrix);
  return proj;
}

} // namespace mpfeec
