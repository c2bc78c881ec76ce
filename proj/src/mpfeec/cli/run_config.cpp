// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/cli/run_config.hpp"

#include <algorithm>
#include <set>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

const std::set<std::string> kKnownKeys = {
    "problem",
    "case",
    "domain.preset",
    "domain.nx",
    "domain.ny",
    "domain.cells",
    "domain.refine_factor",
    "domain.refine_rule",
    "domain.refined_patches",
    "domain.inner_radius",
    "domain.outer_radius",
    "discretization.degree",
    "discretization.moment_order",
    "discretization.bc",
    "discretization.alpha",
    "harmonic.omega",
    "time.dt",
    "time.cfl",
    "time.t_max",
    "time.snapshot_stride",
    "time.pulse_center",
    "time.pulse_sigma",
    "eig.count",
    "eig.sigma",
    "sweep.degrees",
    "sweep.levels",
    "sweep.r_values",
    "output.dir",
    "output.format",
    "output.jobs",
    "output.seed",
    "output.sample_grid",
};

std::vector<int> to_int_vector(const std::vector<long long> &in) {
  std::vector<int> out;
  for (long long v : in) out.push_back(static_cast<int>(v));
  return out;
}

} // namespace

DomainSpec RunConfig::domain_at_level(int level) const {
  PresetParams params = preset_params;
  params.cells <<= level;
  return preset_domain(preset, params);
}

DomainSpec RunConfig::metric_variant_at_level(int level) const {
  PresetParams params = preset_params;
  params.cells <<= level;
  return preset_domain_metric_variant(preset, params);
}

ProblemConfig RunConfig::problem_config(int degree_, int level, int r) const {
  ProblemConfig cfg;
  cfg.domain = domain_at_level(level);
  cfg.degree = degree_;
  cfg.moment_order = r;
  cfg.bc = bc;
  cfg.alpha = alpha;
  cfg.omega = omega;
  cfg.dt = dt;
  cfg.cfl_fraction = cfl;
  cfg.t_max = t_max;
  cfg.snapshot_stride = snapshot_stride;
  cfg.pulse_center = pulse_center;
  cfg.pulse_sigma = pulse_sigma;
  cfg.eig_count = eig_count;
  cfg.eig_sigma = eig_sigma;
  cfg.seed = seed;
  return cfg;
}

RunConfig parse_run_config(const ConfigTable &table) {
  for (const std::string &key : table.keys())
    if (!kKnownKeys.count(key))
      throw ValidationError("unknown config key '" + key + "'");

  RunConfig rc;
  rc.problem = table.get_string("problem", "");
  rc.case_name = table.get_string("case", "sine");

  rc.preset = table.get_string("domain.preset", "");
  MPFEEC_REQUIRE(!rc.preset.empty(), "config requires domain.preset");
  rc.preset_params.nx = static_cast<int>(table.get_integer("domain.nx", 2));
  rc.preset_params.ny =
      static_cast<int>(table.get_integer("domain.ny", rc.preset_params.nx));
  rc.preset_params.cells = static_cast<int>(table.get_integer("domain.cells", 4));
  rc.preset_params.refine_factor =
      static_cast<int>(table.get_integer("domain.refine_factor", 2));
  rc.preset_params.refine_rule = table.get_string("domain.refine_rule", "none");
  if (table.has("domain.refined_patches")) {
    rc.preset_params.refined_patches =
        to_int_vector(table.get("domain.refined_patches").as_integer_array());
    if (rc.preset_params.refine_rule == "none")
      rc.preset_params.refine_rule = "list";
  }
  rc.preset_params.inner_radius = table.get_real("domain.inner_radius", 0.5);
  rc.preset_params.outer_radius = table.get_real("domain.outer_radius", 1.0);
  MPFEEC_REQUIRE(rc.preset_params.refine_factor >= 1 &&
                     (rc.preset_params.refine_factor &
                      (rc.preset_params.refine_factor - 1)) == 0 &&
                     rc.preset_params.refine_factor <= 8,
                 "refine_factor must be a dyadic factor in {1,2,4,8}");

  MPFEEC_REQUIRE(table.has("discretization.degree"),
                 "config requires discretization.degree");
  rc.degree = static_cast<int>(table.get("discretization.degree").as_integer());
  MPFEEC_REQUIRE(rc.degree >= 1 && rc.degree <= 8,
                 "degree must lie in 1..8");
  rc.moment_order =
      static_cast<int>(table.get_integer("discretization.moment_order", -1));
  const std::string bc = table.get_string("discretization.bc", "");
  rc.bc_given = !bc.empty();
  if (bc.empty() || bc == "homogeneous")
    rc.bc = BoundaryCondition::Homogeneous;
  else if (bc == "none")
    rc.bc = BoundaryCondition::None;
  else
    throw ValidationError("discretization.bc must be 'none' or 'homogeneous'");
  rc.alpha = table.get_real("discretization.alpha", 1.0);
  MPFEEC_REQUIRE(rc.alpha > 0.0, "discretization.alpha must be positive");

  rc.omega = table.get_real("harmonic.omega", 1.0);

  rc.dt = table.get_real("time.dt", 0.0);
  rc.cfl = table.get_real("time.cfl", 0.5);
  rc.t_max = table.get_real("time.t_max", 0.0);
  rc.snapshot_stride =
      static_cast<int>(table.get_integer("time.snapshot_stride", 10));
  MPFEEC_REQUIRE(rc.snapshot_stride >= 1, "snapshot_stride must be >= 1");
  if (table.has("time.pulse_center")) {
    const auto c = table.get("time.pulse_center").as_real_array();
    MPFEEC_REQUIRE(c.size() == 2, "time.pulse_center needs two entries");
    rc.pulse_center = {c[0], c[1]};
  }
  rc.pulse_sigma = table.get_real("time.pulse_sigma", 0.1);

  rc.eig_count = static_cast<int>(table.get_integer("eig.count", 8));
  rc.eig_sigma = table.get_real("eig.sigma", 0.0);
  MPFEEC_REQUIRE(rc.eig_count >= 1, "eig.count must be >= 1");

  if (table.has("sweep.degrees")) {
    rc.sweep_degrees = to_int_vector(table.get("sweep.degrees").as_integer_array());
    rc.sweep_degrees_given = true;
  }
  if (table.has("sweep.levels")) {
    rc.sweep_levels = to_int_vector(table.get("sweep.levels").as_integer_array());
    rc.sweep_levels_given = true;
  }
  if (table.has("sweep.r_values")) {
    rc.sweep_r_values =
        to_int_vector(table.get("sweep.r_values").as_integer_array());
    rc.sweep_r_values_given = true;
  }

  rc.out_dir = table.get_string("output.dir", "out");
  rc.format = table.get_string("output.format", "csv");
  MPFEEC_REQUIRE(rc.format == "csv" || rc.format == "vtk",
                 "output.format must be 'csv' or 'vtk'");
  rc.jobs = static_cast<int>(table.get_integer("output.jobs", 1));
  MPFEEC_REQUIRE(rc.jobs >= 1, "output.jobs must be >= 1");
  rc.seed = static_cast<std::uint64_t>(table.get_integer("output.seed", 12345));
  rc.sample_grid =
      static_cast<int>(table.get_integer("output.sample_grid", 32));
  MPFEEC_REQUIRE(rc.sample_grid >= 2, "output.sample_grid must be >= 2");
  return rc;
}

RunConfig parse_run_config_file(const std::string &path) {
  return parse_run_config(ConfigTable::parse_file(path));
}

RunConfig parse_run_config_text(const std::string &text) {
  return parse_run_config(ConfigTable::parse_text(text));
}

} // namespace mpfeec
