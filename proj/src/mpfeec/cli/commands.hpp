// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CLI_COMMANDS_HPP
#define MPFEEC_CLI_COMMANDS_HPP

#include <iosfwd>

#include "mpfeec/cli/run_config.hpp"

namespace mpfeec {

// Subcommand entry points. Invalid input and solver failures are reported by
// exception (mapped to exit codes 2/3 by the tool); the returned value is the
// exit code for regular completion, with 4 flagging an invariant breach.

/// Runs the conforming-projection property suite on the configured domain and
/// prints one pass/fail row per check. corrupt_hook deliberately damages the
/// assembled matrix first (negative control).
int cmd_verify_projection(const RunConfig &rc, std::ostream &out,
                          bool corrupt_hook = false);

/// poisson | maxwell-th: one solve, writes report.csv and field snapshots.
int cmd_solve(const RunConfig &rc);

/// curlcurl: writes eigenvalues.csv.
int cmd_eig(const RunConfig &rc);

/// td-maxwell | td-helmholtz: leap-frog run, writes timeseries.csv, a report
/// and field snapshots at the configured stride.
int cmd_run(const RunConfig &rc);

/// Convergence sweep over degrees x moment orders x refinement levels; one
/// CSV per (degree, r) with columns level,h,dof,error,observed_order.
int cmd_convergence(const RunConfig &rc);

/// Writes the assembled operator matrices and per-edge trace operators in
/// Matrix Market format.
int cmd_export_matrices(const RunConfig &rc);

} // namespace mpfeec

#endif
