// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <iostream>

#include "mpfeec/cli/commands.hpp"
#include "mpfeec/core/errors.hpp"

using namespace mpfeec;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::string format;
  int jobs = 0;
};

void add_common(CLI::App *cmd, CommonOpts &opts) {
  cmd->add_option("--config", opts.config_path, "configuration file")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory override");
  cmd->add_option("--jobs", opts.jobs, "parallel sweep jobs override");
  cmd->add_option("--format", opts.format, "output format override (csv|vtk)");
}

RunConfig load(const CommonOpts &opts) {
  RunConfig rc = parse_run_config_file(opts.config_path);
  if (!opts.out_dir.empty()) rc.out_dir = opts.out_dir;
  if (!opts.format.empty()) {
    MPFEEC_REQUIRE(opts.format == "csv" || opts.format == "vtk",
                   "--format must be csv or vtk");
    rc.format = opts.format;
  }
  if (opts.jobs > 0) rc.jobs = opts.jobs;
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"broken-FEEC multipatch spline solver"};
  app.require_subcommand(1);

  CommonOpts verify_opts, solve_opts, eig_opts, run_opts, conv_opts, exp_opts;
  bool corrupt_hook = false;
  std::string solve_problem, eig_problem, run_problem;

  CLI::App *verify = app.add_subcommand(
      "verify-projection", "run the conforming projection property suite");
  add_common(verify, verify_opts);
  verify->add_flag("--corrupt-projection", corrupt_hook,
                   "test hook: damage the matrix first")
      ->group(""); // hidden

  CLI::App *solve = app.add_subcommand("solve", "solve a stationary problem");
  solve->add_option("problem", solve_problem, "poisson | maxwell-th")
      ->required();
  add_common(solve, solve_opts);

  CLI::App *eig = app.add_subcommand("eig", "solve an eigenvalue problem");
  eig->add_option("problem", eig_problem, "curlcurl")->required();
  add_common(eig, eig_opts);

  CLI::App *run = app.add_subcommand("run", "run a time-domain problem");
  run->add_option("problem", run_problem, "td-maxwell | td-helmholtz")
      ->required();
  add_common(run, run_opts);

  CLI::App *conv = app.add_subcommand("convergence", "run a convergence sweep");
  add_common(conv, conv_opts);

  CLI::App *exp = app.add_subcommand("export-matrices",
                                     "write operator matrices in Matrix Market "
                                     "format");
  add_common(exp, exp_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify_projection(load(verify_opts), std::cout, corrupt_hook);
    if (solve->parsed()) {
      RunConfig rc = load(solve_opts);
      rc.problem = solve_problem;
      return cmd_solve(rc);
    }
    if (eig->parsed()) {
      RunConfig rc = load(eig_opts);
      rc.problem = eig_problem;
      return cmd_eig(rc);
    }
    if (run->parsed()) {
      RunConfig rc = load(run_opts);
      rc.problem = run_problem;
      return cmd_run(rc);
    }
    if (conv->parsed()) return cmd_convergence(load(conv_opts));
    if (exp->parsed()) return cmd_export_matrices(load(exp_opts));
  } catch (const ValidationError &err) {
    std::cerr << "validation error: " << err.what() << "\n";
    return 2;
  } catch (const GeometryError &err) {
    std::cerr << "geometry error: " << err.what() << "\n";
    return 2;
  } catch (const NumericalError &err) {
    std::cerr << "numerical error: " << err.what() << "\n";
    return 3;
  } catch (const InvariantBreach &err) {
    std::cerr << "invariant breach: " << err.what() << "\n";
    return 4;
  }
  return 0;
}
