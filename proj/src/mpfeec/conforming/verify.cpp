// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/conforming/verify.hpp"

#include <cmath>
#include <map>
#include <random>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/derham/diff_matrices.hpp"
#include "mpfeec/derham/evaluate.hpp"
#include "mpfeec/splines/knot_insertion.hpp"
#include "mpfeec/splines/moments.hpp"

namespace mpfeec {

namespace {

// Logical point on a side at the side's own parameter t.
Vec2 side_xh(int side, double t) {
  switch (side) {
  case West: return {0.0, t};
  case East: return {1.0, t};
  case South: return {t, 0.0};
  default: return {t, 1.0};
  }
}

// Scalar trace on a side in the side's parameter.
double trace0(const DeRhamSpaces &sp, const std::vector<double> &c, int patch,
              int side, double t) {
  return evaluate_pullback(sp, 0, c, patch, side_xh(side, t))[0];
}

// Edge-parallel (tangential) pullback component on a side.
double trace1(const DeRhamSpaces &sp, const std::vector<double> &c, int patch,
              int side, double t) {
  const Vec2 v = evaluate_pullback(sp, 1, c, patch, side_xh(side, t));
  return v[side_par_dir(side)];
}

// Layer-0 DOF of a side at parallel index i (level 0 spaces).
index_t side_dof0(const DeRhamSpaces &sp, int patch, int side, int i) {
  const auto &pk = sp.patch(patch);
  const int pd = side_par_dir(side), qd = side_perp_dir(side);
  const int perp = side_at_upper_end(side) ? pk.pdim[qd] - 1 : 0;
  return pd == 0 ? sp.idx0(patch, i, perp) : sp.idx0(patch, perp, i);
}

// Tangential layer-0 DOF of a side at parallel index i (level 1).
index_t side_dof1(const DeRhamSpaces &sp, int patch, int side, int i) {
  const auto &pk = sp.patch(patch);
  const int pd = side_par_dir(side), qd = side_perp_dir(side);
  const int perp = side_at_upper_end(side) ? pk.pdim[qd] - 1 : 0;
  return pd == 0 ? sp.idx1(patch, 1, i, perp) : sp.idx1(patch, 2, perp, i);
}

} // namespace

std::vector<double> make_conforming_field(const DeRhamSpaces &sp, int level,
                                          BoundaryCondition bc,
                                          std::uint64_t seed) {
  MPFEEC_REQUIRE(level == 0 || level == 1,
                 "conforming construction exists for levels 0 and 1");
  const MultipatchTopology &topo = sp.topology();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> c(sp.dim(level));
  for (double &x : c) x = unif(rng);

  if (level == 0) {
    // Vertices: zero on the boundary for the homogeneous variant, otherwise a
    // common average.
    for (const Vertex &v : topo.vertices()) {
      std::vector<index_t> dofs;
      for (const auto &corner : v.corners) {
        const auto &pk = sp.patch(corner.patch);
        const int i1 = corner.corner & 1 ? pk.pdim[0] - 1 : 0;
        const int i2 = corner.corner & 2 ? pk.pdim[1] - 1 : 0;
        dofs.push_back(sp.idx0(corner.patch, i1, i2));
      }
      double val = 0.0;
      if (!(bc == BoundaryCondition::Homogeneous && v.boundary)) {
        for (index_t d : dofs) val += c[d];
        val /= static_cast<double>(dofs.size());
      }
      for (index_t d : dofs) c[d] = val;
    }
    // Homogeneous boundary traces.
    if (bc == BoundaryCondition::Homogeneous) {
      for (const Edge &e : topo.edges()) {
        if (!e.boundary) continue;
        const int pd = side_par_dir(e.coarse.side);
        const int n = sp.patch(e.coarse.patch).pdim[pd] - 1;
        for (int i = 0; i <= n; ++i)
          c[side_dof0(sp, e.coarse.patch, e.coarse.side, i)] = 0.0;
      }
    }
    // Interior interfaces: fine trace = extension of the coarse trace.
    for (const Edge &e : topo.edges()) {
      if (e.boundary) continue;
      const KnotVector &ckv =
          topo.patch_knots(e.coarse.patch, side_par_dir(e.coarse.side));
      KnotVector fkv = topo.patch_knots(e.fine.patch, side_par_dir(e.fine.side));
      if (e.fine.par_reversed) fkv = fkv.reversed();
      const UnivariateSpace cs(ckv), fs(fkv);
      const DenseMatrix ext = knot_insertion_matrix(cs, fs);
      const int nc = cs.dim() - 1, nf = fs.dim() - 1;
      std::vector<double> tr(nc + 1);
      for (int i = 0; i <= nc; ++i)
        tr[i] = c[side_dof0(sp, e.coarse.patch, e.coarse.side, i)];
      const std::vector<double> ftr = ext.apply(tr);
      for (int i = 0; i <= nf; ++i) {
        const int pi = e.fine.par_reversed ? nf - i : i;
        c[side_dof0(sp, e.fine.patch, e.fine.side, pi)] = ftr[i];
      }
    }
    return c;
  }

  // level 1: tangential traces only.
  if (bc == BoundaryCondition::Homogeneous) {
    for (const Edge &e : topo.edges()) {
      if (!e.boundary) continue;
      const int pd = side_par_dir(e.coarse.side);
      const int n1 = sp.patch(e.coarse.patch).ddim[pd];
      for (int i = 0; i < n1; ++i)
        c[side_dof1(sp, e.coarse.patch, e.coarse.side, i)] = 0.0;
    }
  }
  for (const Edge &e : topo.edges()) {
    if (e.boundary) continue;
    const KnotVector &ckv =
        topo.patch_knots(e.coarse.patch, side_par_dir(e.coarse.side));
    KnotVector fkv = topo.patch_knots(e.fine.patch, side_par_dir(e.fine.side));
    if (e.fine.par_reversed) fkv = fkv.reversed();
    const UnivariateSpace cs1 = UnivariateSpace(ckv).derivative_space();
    const UnivariateSpace fs1 = UnivariateSpace(fkv).derivative_space();
    const DenseMatrix ext = knot_insertion_matrix(cs1, fs1);
    const int nc1 = cs1.dim(), nf1 = fs1.dim();
    const double sgn = e.fine.par_reversed ? -1.0 : 1.0;
    std::vector<double> tr(nc1);
    for (int i = 0; i < nc1; ++i)
      tr[i] = c[side_dof1(sp, e.coarse.patch, e.coarse.side, i)];
    const std::vector<double> ftr = ext.apply(tr);
    for (int i = 0; i < nf1; ++i) {
      const int pi = e.fine.par_reversed ? nf1 - 1 - i : i;
      c[side_dof1(sp, e.fine.patch, e.fine.side, pi)] = sgn * ftr[i];
    }
  }
  return c;
}

double conformity_error(const DeRhamSpaces &sp, int level,
                        const std::vector<double> &coeffs,
                        BoundaryCondition bc, int samples) {
  const MultipatchTopology &topo = sp.topology();
  double worst = 0.0;
  for (const Edge &e : topo.edges()) {
    if (e.boundary) {
      if (bc != BoundaryCondition::Homogeneous) continue;
      for (int s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) / samples;
        const double v =
            level == 0
                ? trace0(sp, coeffs, e.coarse.patch, e.coarse.side, t)
                : trace1(sp, coeffs, e.coarse.patch, e.coarse.side, t);
        worst = std::max(worst, std::abs(v));
      }
      continue;
    }
    const double sgn = e.fine.par_reversed ? -1.0 : 1.0;
    for (int s = 0; s <= samples; ++s) {
      const double t = static_cast<double>(s) / samples;
      const double tf = e.fine.par_reversed ? 1.0 - t : t;
      double vc, vf;
      if (level == 0) {
        vc = trace0(sp, coeffs, e.coarse.patch, e.coarse.side, t);
        vf = trace0(sp, coeffs, e.fine.patch, e.fine.side, tf);
      } else {
        vc = trace1(sp, coeffs, e.coarse.patch, e.coarse.side, t);
        vf = sgn * trace1(sp, coeffs, e.fine.patch, e.fine.side, tf);
      }
      worst = std::max(worst, std::abs(vc - vf));
    }
  }
  return worst;
}

double moment_preservation_error(const DeRhamSpaces &sp, int level, int r,
                                 const SparseMatrix &proj) {
  if (r == 0) return 0.0;
  const index_t n = sp.dim(level);
  // Per-DOF tensor moments against the r x r Bernstein test set.
  std::vector<std::vector<double>> mom(n);
  std::vector<int> dof_patch(n);
  for (int k = 0; k < sp.num_patches(); ++k) {
    const auto &pk = sp.patch(k);
    const DenseMatrix t0a = basis_moment_table(pk.primal[0], r);
    const DenseMatrix t0b = basis_moment_table(pk.primal[1], r);
    const DenseMatrix t1a = basis_moment_table(pk.derived[0], r);
    const DenseMatrix t1b = basis_moment_table(pk.derived[1], r);
    auto fill = [&](index_t dof, const DenseMatrix &ta, int ia,
                    const DenseMatrix &tb, int ib) {
      dof_patch[dof] = k;
      auto &m = mom[dof];
      m.resize(r * r);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) m[a * r + b] = ta(a, ia) * tb(b, ib);
    };
    if (level == 0) {
      for (int i1 = 0; i1 < pk.pdim[0]; ++i1)
        for (int i2 = 0; i2 < pk.pdim[1]; ++i2)
          fill(sp.idx0(k, i1, i2), t0a, i1, t0b, i2);
    } else {
      for (int i1 = 0; i1 < pk.ddim[0]; ++i1)
        for (int i2 = 0; i2 < pk.pdim[1]; ++i2)
          fill(sp.idx1(k, 1, i1, i2), t1a, i1, t0b, i2);
      for (int i1 = 0; i1 < pk.pdim[0]; ++i1)
        for (int i2 = 0; i2 < pk.ddim[1]; ++i2)
          fill(sp.idx1(k, 2, i1, i2), t0a, i1, t1b, i2);
    }
  }

  // For level 1, moments of the two logical components are tracked
  // separately; encode the component in the accumulator key.
  std::vector<int> dof_comp(n, 0);
  if (level == 1) {
    for (int k = 0; k < sp.num_patches(); ++k) {
      const auto &pk = sp.patch(k);
      for (int i1 = 0; i1 < pk.pdim[0]; ++i1)
        for (int i2 = 0; i2 < pk.ddim[1]; ++i2)
          dof_comp[sp.idx1(k, 2, i1, i2)] = 1;
    }
  }

  const SparseMatrix pt = proj.transpose();
  const auto &offs = pt.row_offsets();
  const auto &cols = pt.col_indices();
  const auto &vals = pt.values();
  double worst = 0.0;
  std::map<std::pair<int, int>, std::vector<double>> acc;
  for (index_t j = 0; j < n; ++j) {
    acc.clear();
    auto add_entry = [&](index_t i, double w) {
      auto &a = acc[{dof_patch[i], dof_comp[i]}];
      if (a.empty()) a.assign(r * r, 0.0);
      const auto &m = mom[i];
      for (int q = 0; q < r * r; ++q) a[q] += w * m[q];
    };
    for (index_t kk = offs[j]; kk < offs[j + 1]; ++kk)
      add_entry(cols[kk], vals[kk]);
    add_entry(j, -1.0);
    for (const auto &[key, a] : acc)
      for (int q = 0; q < r * r; ++q) worst = std::max(worst, std::abs(a[q]));
  }
  return worst;
}

double locality_error(const DeRhamSpaces &sp, int level, int r,
                      BoundaryCondition bc, const SparseMatrix &proj) {
  const MultipatchTopology &topo = sp.topology();
  // Sides whose edge carries a projection stencil.
  std::vector<std::array<bool, 4>> touched(sp.num_patches(), {false, false,
                                                              false, false});
  for (const Edge &e : topo.edges()) {
    if (e.boundary) {
      if (bc == BoundaryCondition::Homogeneous)
        touched[e.coarse.patch][e.coarse.side] = true;
      continue;
    }
    touched[e.coarse.patch][e.coarse.side] = true;
    touched[e.fine.patch][e.fine.side] = true;
  }

  const int band = std::max(r, 0);
  auto far0 = [&](int k, int i1, int i2) {
    const auto &pk = sp.patch(k);
    const int d[4] = {i1, pk.pdim[0] - 1 - i1, i2, pk.pdim[1] - 1 - i2};
    for (int s = 0; s < 4; ++s)
      if (touched[k][s] && d[s] <= band) return false;
    return true;
  };
  auto far1 = [&](int k, int comp, int i1, int i2) {
    const auto &pk = sp.patch(k);
    // Only the tangential component of a side is stenciled; for component d
    // the relevant sides run parallel to direction d-1.
    if (comp == 1) {
      if (touched[k][South] && i2 <= band) return false;
      if (touched[k][North] && pk.pdim[1] - 1 - i2 <= band) return false;
    } else {
      if (touched[k][West] && i1 <= band) return false;
      if (touched[k][East] && pk.pdim[0] - 1 - i1 <= band) return false;
    }
    return true;
  };

  const auto &offs = proj.row_offsets();
  const auto &cols = proj.col_indices();
  const auto &vals = proj.values();
  double worst = 0.0;
  auto check_row = [&](index_t row) {
    double dev = 0.0;
    bool diag = false;
    for (index_t kk = offs[row]; kk < offs[row + 1]; ++kk) {
      if (cols[kk] == row) {
        diag = true;
        dev = std::max(dev, std::abs(vals[kk] - 1.0));
      } else {
        dev = std::max(dev, std::abs(vals[kk]));
      }
    }
    if (!diag) dev = std::max(dev, 1.0);
    worst = std::max(worst, dev);
  };
  for (int k = 0; k < sp.num_patches(); ++k) {
    const auto &pk = sp.patch(k);
    if (level == 0) {
      for (int i1 = 0; i1 < pk.pdim[0]; ++i1)
        for (int i2 = 0; i2 < pk.pdim[1]; ++i2)
          if (far0(k, i1, i2)) check_row(sp.idx0(k, i1, i2));
    } else {
      for (int i1 = 0; i1 < pk.ddim[0]; ++i1)
        for (int i2 = 0; i2 < pk.pdim[1]; ++i2)
          if (far1(k, 1, i1, i2)) check_row(sp.idx1(k, 1, i1, i2));
      for (int i1 = 0; i1 < pk.pdim[0]; ++i1)
        for (int i2 = 0; i2 < pk.ddim[1]; ++i2)
          if (far1(k, 2, i1, i2)) check_row(sp.idx1(k, 2, i1, i2));
    }
  }
  return worst;
}

CheckReport verify_projection(const DomainSpec &domain,
                              const DomainSpec *metric_variant, int degree,
                              int level, int r, BoundaryCondition bc,
                              std::uint64_t seed,
                              const SparseMatrix *corrupted) {
  CheckReport report;
  auto spaces = DeRhamSpaces::build(MultipatchTopology::build(domain, degree));
  const ConformingProjection proj =
      assemble_conforming_projection(spaces, level, r, bc);
  const SparseMatrix &p = corrupted ? *corrupted : proj.matrix;

  // Idempotence
  {
    const SparseMatrix pp = multiply(p, p);
    report.add("idempotence", add(pp, 1.0, p, -1.0).max_abs(), 1e-11);
  }
  // Conformity of the range on random inputs
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<double> c(spaces->dim(level));
      for (double &x : c) x = unif(rng);
      worst = std::max(worst, conformity_error(*spaces, level, p * c, bc));
    }
    report.add("conformity", worst, 1e-10);
  }
  // Reproduction of conforming fields
  {
    const std::vector<double> c =
        make_conforming_field(*spaces, level, bc, seed ^ 0x9e3779b9);
    std::vector<double> pc = p * c;
    double dev = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      dev = std::max(dev, std::abs(pc[i] - c[i]));
    if (level == 1) {
      // A discrete gradient of a conforming scalar field is conforming too.
      const std::vector<double> c0 =
          make_conforming_field(*spaces, 0, bc, seed ^ 0x51ed2705);
      const SparseMatrix g = gradient_matrix(*spaces);
      const std::vector<double> u = g * c0;
      const std::vector<double> pu = p * u;
      for (std::size_t i = 0; i < u.size(); ++i)
        dev = std::max(dev, std::abs(pu[i] - u[i]));
    }
    report.add("reproduction", dev, 1e-11);
  }
  // Moment preservation
  report.add("moment-preservation", moment_preservation_error(*spaces, level, r, p),
             1e-11);
  // Commutation of the stencil factors (stated for the plain projections)
  if (bc == BoundaryCondition::None && !corrupted) {
    const ConformingProjection rev =
        assemble_conforming_projection(spaces, level, r, bc, true);
    report.add("factor-commutation",
               add(proj.matrix, 1.0, rev.matrix, -1.0).max_abs(), 1e-12);
  }
  // Locality
  report.add("locality", locality_error(*spaces, level, r, bc, p), 0.0);
  // Metric independence
  if (metric_variant && !corrupted) {
    auto spaces2 =
        DeRhamSpaces::build(MultipatchTopology::build(*metric_variant, degree));
    MPFEEC_REQUIRE(spaces2->dim(level) == spaces->dim(level),
                   "metric variant must keep the discretization layout");
    const ConformingProjection proj2 =
        assemble_conforming_projection(spaces2, level, r, bc);
    report.add("metric-independence",
               add(proj.matrix, 1.0, proj2.matrix, -1.0).max_abs(), 0.0);
  }
  return report;
}

} // namespace mpfeec
