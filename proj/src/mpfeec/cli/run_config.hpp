// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CLI_RUN_CONFIG_HPP
#define MPFEEC_CLI_RUN_CONFIG_HPP

#include <string>
#include <vector>

#include "mpfeec/cli/config_file.hpp"
#include "mpfeec/geometry/presets.hpp"
#include "mpfeec/solvers/config.hpp"

namespace mpfeec {

/// Validated run configuration. Unknown keys are rejected at parse time; the
/// spline degree and the domain preset are the only required entries.
struct RunConfig {
  std::string problem; // poisson | maxwell-th | curlcurl | td-maxwell |
                       // td-helmholtz | weak-div | weak-curl
  std::string case_name = "sine";

  std::string preset;
  PresetParams preset_params;

  int degree = 0;
  int moment_order = -1;
  BoundaryCondition bc = BoundaryCondition::Homogeneous;
  bool bc_given = false;
  double alpha = 1.0;
  double omega = 1.0;

  double dt = 0.0;
  double cfl = 0.5;
  double t_max = 0.0;
  int snapshot_stride = 10;
  Vec2 pulse_center{M_PI / 2, M_PI / 2};
  double pulse_sigma = 0.1;

  int eig_count = 8;
  double eig_sigma = 0.0;

  std::vector<int> sweep_degrees;
  std::vector<int> sweep_levels;
  std::vector<int> sweep_r_values;
  bool sweep_degrees_given = false;
  bool sweep_levels_given = false;
  bool sweep_r_values_given = false;

  std::string out_dir = "out";
  std::string format = "csv"; // csv | vtk
  int jobs = 1;
  std::uint64_t seed = 12345;
  int sample_grid = 32;

  /// Domain with every patch's cell count scaled by 2^level.
  DomainSpec domain_at_level(int level) const;
  DomainSpec metric_variant_at_level(int level) const;

  /// ProblemConfig for one sweep cell.
  ProblemConfig problem_config(int degree_, int level, int r) const;
  ProblemConfig problem_config() const { return problem_config(degree, 0, moment_order); }
};

RunConfig parse_run_config(const ConfigTable &table);
RunConfig parse_run_config_file(const std::string &path);
RunConfig parse_run_config_text(const std::string &text);

} // namespace mpfeec

#endif
