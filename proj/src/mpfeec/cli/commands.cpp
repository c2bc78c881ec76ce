// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/cli/commands.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "mpfeec/conforming/verify.hpp"
#include "mpfeec/core/errors.hpp"
#include "mpfeec/derham/evaluate.hpp"
#include "mpfeec/linalg/matrix_market.hpp"
#include "mpfeec/operators/weak.hpp"
#include "mpfeec/solvers/eigensolve.hpp"
#include "mpfeec/solvers/manufactured.hpp"
#include "mpfeec/solvers/maxwell_th.hpp"
#include "mpfeec/solvers/poisson.hpp"
#include "mpfeec/solvers/timedomain.hpp"

namespace mpfeec {

namespace {

bool log_enabled() {
  static const bool on = [] {
    const char *env = std::getenv("FEEC_LOG");
    return env && *env && std::string(env) != "0" && std::string(env) != "quiet";
  }();
  return on;
}

void log_line(const std::string &msg) {
  if (log_enabled()) std::cerr << "[feec] " << msg << "\n";
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path &path) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  MPFEEC_REQUIRE(os.good(), "cannot open output file: " + path.string());
  return os;
}

void write_kv_report(const std::filesystem::path &path,
                     const std::vector<std::pair<std::string, std::string>> &rows) {
  std::ofstream os = open_out(path);
  os << "key,value\n";
  for (const auto &[k, v] : rows) os << k << "," << v << "\n";
}

// One plain-text table per patch: sampled physical coordinates plus field
// components. The optional legacy-VTK writer emits a structured grid.
void write_field_snapshot(const RunConfig &rc, const std::string &prefix,
                          const FemField &field) {
  const int n = rc.sample_grid;
  const auto &topo = field.spaces->topology();
  for (int k = 0; k < field.spaces->num_patches(); ++k) {
    const auto &map = topo.patches()[k].mapping;
    std::vector<std::array<double, 4>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Vec2 xh{i / (n - 1.0), j / (n - 1.0)};
        const Vec2 x = map.map(xh);
        const Vec2 v = evaluate_field(field, k, xh);
        rows.push_back({x[0], x[1], v[0], v[1]});
      }
    }
    const std::filesystem::path base =
        std::filesystem::path(rc.out_dir) /
        (prefix + "_patch" + std::to_string(k));
    if (rc.format == "vtk") {
      std::ofstream os = open_out(base.string() + ".vtk");
      os << "# vtk DataFile Version 3.0\nfield snapshot\nASCII\n";
      os << "DATASET STRUCTURED_GRID\n";
      os << "DIMENSIONS " << n << " " << n << " 1\n";
      os << "POINTS " << n * n << " double\n";
      for (const auto &r : rows)
        os << fmt(r[0]) << " " << fmt(r[1]) << " 0\n";
      os << "POINT_DATA " << n * n << "\n";
      if (field.level == 1) {
        os << "VECTORS field double\n";
        for (const auto &r : rows)
          os << fmt(r[2]) << " " << fmt(r[3]) << " 0\n";
      } else {
        os << "SCALARS field double 1\nLOOKUP_TABLE default\n";
        for (const auto &r : rows) os << fmt(r[2]) << "\n";
      }
    } else {
      std::ofstream os = open_out(base.string() + ".csv");
      os << (field.level == 1 ? "x,y,vx,vy\n" : "x,y,value\n");
      for (const auto &r : rows) {
        os << fmt(r[0]) << "," << fmt(r[1]) << "," << fmt(r[2]);
        if (field.level == 1) os << "," << fmt(r[3]);
        os << "\n";
      }
    }
  }
}

struct ManufacturedPick {
  ScalarField scalar_source, scalar_exact;
  VectorField vector_source, vector_exact;
  ScalarField exact_curl;
};

ManufacturedPick pick_case(const RunConfig &rc) {
  MPFEEC_REQUIRE(rc.case_name == "sine",
                 "unknown manufactured case '" + rc.case_name + "'");
  ManufacturedPick pick;
  const PoissonCase pc = poisson_sine_case();
  pick.scalar_source = pc.source;
  pick.scalar_exact = pc.exact;
  const MaxwellCase mc = maxwell_sine_case(rc.omega);
  pick.vector_source = mc.source;
  pick.vector_exact = mc.exact;
  pick.exact_curl = mc.exact_curl;
  return pick;
}

void run_cells_parallel(int jobs, int cell_count,
                        const std::function<void(int)> &work) {
  if (jobs <= 1 || cell_count <= 1) {
    for (int i = 0; i < cell_count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n = std::min(jobs, cell_count);
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < cell_count; i = next++) work(i);
    });
  }
  for (auto &t : pool) t.join();
}

} // namespace

int cmd_verify_projection(const RunConfig &rc, std::ostream &out,
                          bool corrupt_hook) {
  const DomainSpec domain = rc.domain_at_level(0);
  const DomainSpec variant = rc.metric_variant_at_level(0);
  bool all_pass = true;
  out << "level  r  check                  measured      tolerance   status\n";
  for (int level : {0, 1}) {
    std::vector<int> rvals = rc.sweep_r_values;
    if (rvals.empty()) rvals = {0, -1};
    for (int rv : rvals) {
      const int rmax = level == 0 ? rc.degree + 1 : rc.degree;
      const int r = rv < 0 ? rmax : std::min(rv, rmax);
      SparseMatrix corrupted;
      const SparseMatrix *corrupted_ptr = nullptr;
      if (corrupt_hook) {
        auto spaces =
            DeRhamSpaces::build(MultipatchTopology::build(domain, rc.degree));
        corrupted =
            assemble_conforming_projection(spaces, level, r, rc.bc).matrix;
        corrupted = add(corrupted, 1.0,
                        SparseMatrix::identity(corrupted.rows()), 1e-3);
        corrupted_ptr = &corrupted;
      }
      const CheckReport report = verify_projection(
          domain, &variant, rc.degree, level, r, rc.bc, rc.seed, corrupted_ptr);
      for (const CheckItem &item : report.items) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-6d %-2d %-22s %-13.3e %-11.0e %s\n",
                      level, r, item.name.c_str(), item.measured,
                      item.tolerance, item.pass ? "pass" : "FAIL");
        out << line;
        all_pass = all_pass && item.pass;
      }
    }
  }
  return all_pass ? 0 : 4;
}

int cmd_solve(const RunConfig &rc) {
  MPFEEC_REQUIRE(rc.problem == "poisson" || rc.problem == "maxwell-th",
                 "solve expects problem poisson or maxwell-th");
  const ManufacturedPick pick = pick_case(rc);
  const ProblemConfig cfg = rc.problem_config();
  std::vector<std::pair<std::string, std::string>> report;
  log_line("solving " + rc.problem + " on preset " + rc.preset);
  if (rc.problem == "poisson") {
    ProblemConfig pcfg = cfg;
    pcfg.bc = BoundaryCondition::Homogeneous;
    const PoissonResult res =
        solve_poisson(pcfg, pick.scalar_source, &pick.scalar_exact);
    report = {{"problem", "poisson"},
              {"dof", std::to_string(res.phi.spaces->dim(0))},
              {"l2_error", fmt(res.l2_error)},
              {"relative_error", fmt(res.relative_error)},
              {"relative_residual", fmt(res.relative_residual)},
              {"jump_seminorm", fmt(res.jump_seminorm)}};
    write_field_snapshot(rc, "phi", res.phi);
  } else {
    ProblemConfig mcfg = cfg;
    if (!rc.bc_given) mcfg.bc = BoundaryCondition::None;
    const MaxwellThResult res = solve_time_harmonic_maxwell(
        mcfg, pick.vector_source, &pick.vector_exact, &pick.exact_curl);
    report = {{"problem", "maxwell-th"},
              {"dof", std::to_string(res.e.spaces->dim(1))},
              {"omega", fmt(mcfg.omega)},
              {"l2_error", fmt(res.l2_error)},
              {"relative_error", fmt(res.relative_error)},
              {"curl_error", fmt(res.curl_error)},
              {"relative_residual", fmt(res.relative_residual)}};
    write_field_snapshot(rc, "e", res.e);
  }
  write_kv_report(std::filesystem::path(rc.out_dir) / "report.csv", report);
  return 0;
}

int cmd_eig(const RunConfig &rc) {
  MPFEEC_REQUIRE(rc.problem == "curlcurl", "eig expects problem curlcurl");
  ProblemConfig cfg = rc.problem_config();
  cfg.bc = BoundaryCondition::Homogeneous;
  log_line("solving curl-curl eigenproblem on preset " + rc.preset);
  const CurlCurlEigResult res = solve_curlcurl_eig(cfg);
  std::ofstream os =
      open_out(std::filesystem::path(rc.out_dir) / "eigenvalues.csv");
  os << "index,lambda,residual\n";
  for (std::size_t i = 0; i < res.eig.eigenvalues.size(); ++i)
    os << i << "," << fmt(res.eig.eigenvalues[i]) << ","
       << fmt(res.eig.residuals[i]) << "\n";
  return 0;
}

int cmd_run(const RunConfig &rc) {
  MPFEEC_REQUIRE(rc.problem == "td-maxwell" || rc.problem == "td-helmholtz",
                 "run expects problem td-maxwell or td-helmholtz");
  ProblemConfig cfg = rc.problem_config();
  if (!rc.bc_given)
    cfg.bc = rc.problem == "td-maxwell" ? BoundaryCondition::None
                                        : BoundaryCondition::Homogeneous;
  const Discretization disc = discretize(cfg.domain, cfg.degree);
  log_line("time-domain run (" + rc.problem + "), dof=" +
           std::to_string(disc.spaces->dim(1)));

  const SnapshotCallback writer = [&](const TimeSeries::Snapshot &snap,
                                      const FemField &primary,
                                      const FemField &) {
    char prefix[48];
    std::snprintf(prefix, sizeof(prefix), "field_step%06d", snap.step);
    write_field_snapshot(rc, prefix, primary);
  };

  TdResult res;
  if (rc.problem == "td-maxwell") {
    res = run_td_maxwell(disc, cfg,
                         gaussian_pulse_e(cfg.pulse_center, cfg.pulse_sigma),
                         gaussian_pulse_b(cfg.pulse_center, cfg.pulse_sigma),
                         nullptr, writer);
  } else {
    const ScalarField phi0 = [cfg](double x, double y) {
      const double dx = x - cfg.pulse_center[0], dy = y - cfg.pulse_center[1];
      const double s2 = cfg.pulse_sigma * cfg.pulse_sigma;
      return std::exp(-(dx * dx + dy * dy) / (2.0 * s2));
    };
    res = run_td_helmholtz(disc, cfg, phi0,
                           [](double, double) -> Vec2 { return {0.0, 0.0}; },
                           writer);
  }

  std::ofstream os =
      open_out(std::filesystem::path(rc.out_dir) / "timeseries.csv");
  os << "step,time,energy,jump_norm,diag_amplitude\n";
  for (const auto &s : res.series.snapshots)
    os << s.step << "," << fmt(s.time) << "," << fmt(s.energy) << ","
       << fmt(s.jump_norm) << "," << fmt(s.diag_amplitude) << "\n";
  write_kv_report(std::filesystem::path(rc.out_dir) / "report.csv",
                  {{"problem", rc.problem},
                   {"dt", fmt(res.series.dt)},
                   {"steps", std::to_string(res.series.steps)},
                   {"lambda_max", fmt(res.series.lambda_max)},
                   {"diag_time", fmt(res.series.diag_time)},
                   {"diag_value", fmt(res.series.diag_value)}});
  return 0;
}

int cmd_convergence(const RunConfig &rc) {
  MPFEEC_REQUIRE(rc.problem == "poisson" || rc.problem == "maxwell-th" ||
                     rc.problem == "weak-div" || rc.problem == "weak-curl",
                 "convergence supports poisson, maxwell-th, weak-div, "
                 "weak-curl");
  const ManufacturedPick pick = pick_case(rc);
  std::vector<int> degrees = rc.sweep_degrees;
  if (!rc.sweep_degrees_given && degrees.empty()) degrees = {rc.degree};
  std::vector<int> levels = rc.sweep_levels;
  if (!rc.sweep_levels_given && levels.empty()) levels = {0, 1, 2};
  std::vector<int> rvals = rc.sweep_r_values;
  if (!rc.sweep_r_values_given && rvals.empty()) rvals = {-1};

  struct Cell {
    int degree, level, r;
    double h = 0.0;
    long long dof = 0;
    double error = std::nan("");
  };
  std::vector<Cell> cells;
  for (int p : degrees)
    for (int rv : rvals)
      for (int lvl : levels) cells.push_back({p, lvl, rv});

  run_cells_parallel(rc.jobs, static_cast<int>(cells.size()), [&](int idx) {
    Cell &cell = cells[idx];
    try {
      const ProblemConfig cfg = rc.problem_config(cell.degree, cell.level, cell.r);
      cell.h = 1.0 / (rc.preset_params.cells << cell.level);
      if (rc.problem == "poisson") {
        ProblemConfig pcfg = cfg;
        pcfg.bc = BoundaryCondition::Homogeneous;
        const PoissonResult res =
            solve_poisson(pcfg, pick.scalar_source, &pick.scalar_exact);
        cell.dof = res.phi.spaces->dim(0);
        cell.error = res.l2_error;
      } else if (rc.problem == "maxwell-th") {
        ProblemConfig mcfg = cfg;
        if (!rc.bc_given) mcfg.bc = BoundaryCondition::None;
        const MaxwellThResult res =
            solve_time_harmonic_maxwell(mcfg, pick.vector_source, &pick.vector_exact);
        cell.dof = res.e.spaces->dim(1);
        cell.error = res.l2_error;
      } else {
        // weak differential operators, homogeneous-bc variant
        const Discretization d = discretize(cfg.domain, cfg.degree);
        const int r0 = cell.r < 0 ? cfg.degree + 1 : std::min(cell.r, cfg.degree + 1);
        const int r1 = cell.r < 0 ? cfg.degree : std::min(cell.r, cfg.degree);
        const SparseMatrix p0h =
            assemble_conforming_projection(d.spaces, 0, r0,
                                           BoundaryCondition::Homogeneous)
                .matrix;
        const SparseMatrix p1h =
            assemble_conforming_projection(d.spaces, 1, r1,
                                           BoundaryCondition::Homogeneous)
                .matrix;
        if (rc.problem == "weak-div") {
          const WeakOperator wdiv =
              WeakOperator::divergence(d.grad, p0h, d.m0, d.m1);
          const FemField pu =
              filtered_projection(d.spaces, d.m1, p1h, weak_div_field());
          const FemField out(0, d.spaces, wdiv.apply(pu.coeffs));
          cell.dof = d.spaces->dim(1);
          cell.error = l2_error(out, weak_div_exact());
        } else {
          const WeakOperator wcurl = WeakOperator::curl(d.curl, p1h, d.m1, d.m2);
          const FemField qf =
              l2_project_broken(d.spaces, 2, weak_curl_field());
          const FemField out(1, d.spaces, wcurl.apply(qf.coeffs));
          cell.dof = d.spaces->dim(2);
          cell.error = l2_error(out, weak_curl_exact());
        }
      }
      log_line("convergence cell p=" + std::to_string(cell.degree) +
               " level=" + std::to_string(cell.level) +
               " error=" + fmt(cell.error));
    } catch (const NumericalError &err) {
      log_line(std::string("cell failed: ") + err.what());
      cell.error = std::nan("");
    }
  });

  for (int p : degrees) {
    for (int rv : rvals) {
      const std::string label = rv < 0 ? "max" : std::to_string(rv);
      std::ofstream os = open_out(std::filesystem::path(rc.out_dir) /
                                  ("conv_" + rc.problem + "_p" +
                                   std::to_string(p) + "_r" + label + ".csv"));
      os << "level,h,dof,error,observed_order\n";
      double prev = std::nan("");
      for (const Cell &cell : cells) {
        if (cell.degree != p || cell.r != rv) continue;
        os << cell.level << "," << fmt(cell.h) << "," << cell.dof << ","
           << fmt(cell.error) << ",";
        if (!std::isnan(prev) && !std::isnan(cell.error) && cell.error > 0.0)
          os << fmt(std::log2(prev / cell.error));
        os << "\n";
        prev = cell.error;
      }
    }
  }
  return 0;
}

int cmd_export_matrices(const RunConfig &rc) {
  const ProblemConfig cfg = rc.problem_config();
  const Discretization d = discretize(cfg.domain, cfg.degree);
  const std::filesystem::path dir(rc.out_dir);
  std::filesystem::create_directories(dir);
  write_matrix_market((dir / "G.mtx").string(), d.grad);
  write_matrix_market((dir / "C.mtx").string(), d.curl);
  write_matrix_market((dir / "M0.mtx").string(), d.m0);
  write_matrix_market((dir / "M1.mtx").string(), d.m1);
  write_matrix_market((dir / "M2.mtx").string(), d.m2);
  for (int level : {0, 1}) {
    const int r = cfg.order_for_level(level);
    for (BoundaryCondition bc :
         {BoundaryCondition::None, BoundaryCondition::Homogeneous}) {
      const std::string name = std::string("P") + std::to_string(level) +
                               (bc == BoundaryCondition::None ? "" : "_hom") +
                               ".mtx";
      write_matrix_market(
          (dir / name).string(),
          assemble_conforming_projection(d.spaces, level, r, bc).matrix);
    }
  }
  for (const Edge &e : d.spaces->topology().edges()) {
    if (e.boundary) continue;
    const InterfaceOperators io = build_interface_operators(
        d.spaces->topology(), e, cfg.order_for_level(0));
    const std::string base = "edge" + std::to_string(e.id) + "_";
    write_matrix_market((dir / (base + "E0.mtx")).string(), io.ext0);
    write_matrix_market((dir / (base + "R0.mtx")).string(), io.res0);
    write_matrix_market((dir / (base + "E1.mtx")).string(), io.ext1);
    write_matrix_market((dir / (base + "R1.mtx")).string(), io.res1);
  }
  return 0;
}

} // namespace mpfeec
