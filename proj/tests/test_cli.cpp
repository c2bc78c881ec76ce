// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mpfeec/cli/commands.hpp"
#include "mpfeec/cli/run_config.hpp"
#include "mpfeec/core/errors.hpp"

using namespace mpfeec;

namespace {

const char *kMinimal = R"(
[domain]
preset = "unit-square-grid"

[discretization]
degree = 2
)";

std::string slurp(const std::filesystem::path &p) {
  std::ifstream is(p);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir(const std::string &tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("mpfeec_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("config parsing") {
  SUBCASE("minimal config fills defaults") {
    const RunConfig rc = parse_run_config_text(kMinimal);
    CHECK(rc.degree == 2);
    CHECK(rc.preset == "unit-square-grid");
    CHECK(rc.preset_params.cells == 4);
    CHECK(rc.moment_order == -1);
    CHECK(rc.alpha == 1.0);
    CHECK(rc.out_dir == "out");
    CHECK(rc.jobs == 1);
    CHECK(rc.format == "csv");
  }
  SUBCASE("missing degree is a validation error") {
    CHECK_THROWS_AS((void)parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"
)"),
                    ValidationError);
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS((void)parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"
turbo = true

[discretization]
degree = 2
)"),
                    ValidationError);
  }
  SUBCASE("parse errors carry line numbers") {
    try {
      (void)parse_run_config_text("\n[domain\npreset = \"x\"\n");
      FAIL("expected a parse error");
    } catch (const ValidationError &err) {
      CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("sweep axes keep their declared order") {
    const RunConfig rc = parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"

[discretization]
degree = 2

[sweep]
degrees = [3, 2]
levels = [2, 0, 1]
r_values = [-1, 0]
)");
    CHECK(rc.sweep_degrees == std::vector<int>{3, 2});
    CHECK(rc.sweep_levels == std::vector<int>{2, 0, 1});
    CHECK(rc.sweep_r_values == std::vector<int>{-1, 0});
  }
  SUBCASE("values are validated") {
    CHECK_THROWS_AS((void)parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"

[discretization]
degree = 2
bc = "periodic"
)"),
                    ValidationError);
    CHECK_THROWS_AS((void)parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"
refine_factor = 3

[discretization]
degree = 2
)"),
                    ValidationError);
  }
}

TEST_CASE("verify-projection command") {
  RunConfig rc = parse_run_config_text(R"(
problem = "poisson"

[domain]
preset = "unit-square-grid"
nx = 2
cells = 4
refined_patches = [0]

[discretization]
degree = 2
bc = "none"
)");
  SUBCASE("clean build passes") {
    std::ostringstream out;
    CHECK(cmd_verify_projection(rc, out) == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("idempotence") != std::string::npos);
  }
  SUBCASE("corrupted matrix is detected") {
    std::ostringstream out;
    CHECK(cmd_verify_projection(rc, out, true) == 4);
    CHECK(out.str().find("FAIL") != std::string::npos);
  }
}

TEST_CASE("convergence command writes deterministic tables") {
  const auto dir = temp_dir("conv");
  RunConfig rc = parse_run_config_text(R"(
problem = "poisson"

[domain]
preset = "unit-square-grid"
nx = 2
cells = 4
refined_patches = [0]

[discretization]
degree = 2

[sweep]
degrees = [2]
levels = [0, 1]
)");
  rc.out_dir = (dir / "a").string();
  CHECK(cmd_convergence(rc) == 0);
  const auto table = dir / "a" / "conv_poisson_p2_rmax.csv";
  REQUIRE(std::filesystem::exists(table));
  const std::string first = slurp(table);
  CHECK(first.rfind("level,h,dof,error,observed_order", 0) == 0);

  // identical config, identical bytes; parallel jobs do not change output
  rc.out_dir = (dir / "b").string();
  rc.jobs = 2;
  CHECK(cmd_convergence(rc) == 0);
  CHECK(slurp(dir / "b" / "conv_poisson_p2_rmax.csv") == first);
}

TEST_CASE("empty sweep produces a header-only table") {
  const auto dir = temp_dir("empty");
  RunConfig rc = parse_run_config_text(R"(
problem = "weak-div"

[domain]
preset = "unit-square-grid"
nx = 2
cells = 4

[discretization]
degree = 2

[sweep]
levels = []
)");
  rc.out_dir = dir.string();
  CHECK(cmd_convergence(rc) == 0);
  const std::string table = slurp(dir / "conv_weak-div_p2_rmax.csv");
  CHECK(table == "level,h,dof,error,observed_order\n");
}

TEST_CASE("solve and eig commands write artifacts") {
  const auto dir = temp_dir("solve");
  RunConfig rc = parse_run_config_text(R"(
problem = "poisson"

[domain]
preset = "unit-square-grid"
nx = 2
cells = 4

[discretization]
degree = 2

[output]
sample_grid = 4
)");
  rc.out_dir = dir.string();
  CHECK(cmd_solve(rc) == 0);
  CHECK(std::filesystem::exists(dir / "report.csv"));
  CHECK(std::filesystem::exists(dir / "phi_patch0.csv"));
  const std::string report = slurp(dir / "report.csv");
  CHECK(report.find("l2_error") != std::string::npos);

  RunConfig re = rc;
  re.problem = "curlcurl";
  re.preset = "square-pi-grid";
  re.eig_count = 3;
  re.out_dir = (dir / "eig").string();
  CHECK(cmd_eig(re) == 0);
  const std::string eigcsv = slurp(dir / "eig" / "eigenvalues.csv");
  CHECK(eigcsv.rfind("index,lambda,residual", 0) == 0);
  int rows = 0;
  for (char c : eigcsv)
    if (c == '\n') ++rows;
  CHECK(rows == 4); // header + k rows
}

TEST_CASE("td run command writes a time series and snapshots") {
  const auto dir = temp_dir("td");
  RunConfig rc = parse_run_config_text(R"(
problem = "td-helmholtz"

[domain]
preset = "square-pi-grid"
nx = 3
cells = 3
refine_rule = "center"

[discretization]
degree = 2

[time]
t_max = 0.3
snapshot_stride = 5

[output]
sample_grid = 4
)");
  rc.out_dir = dir.string();
  CHECK(cmd_run(rc) == 0);
  CHECK(std::filesystem::exists(dir / "timeseries.csv"));
  CHECK(std::filesystem::exists(dir / "report.csv"));
  CHECK(std::filesystem::exists(dir / "field_step000000_patch0.csv"));
  const std::string ts = slurp(dir / "timeseries.csv");
  CHECK(ts.rfind("step,time,energy,jump_norm,diag_amplitude", 0) == 0);
}

TEST_CASE("vtk snapshot format") {
  const auto dir = temp_dir("vtk");
  RunConfig rc = parse_run_config_text(R"(
problem = "poisson"

[domain]
preset = "unit-square-grid"
nx = 2
cells = 4

[discretization]
degree = 2

[output]
sample_grid = 3
format = "vtk"
)");
  rc.out_dir = dir.string();
  CHECK(cmd_solve(rc) == 0);
  const auto vtk = dir / "phi_patch0.vtk";
  REQUIRE(std::filesystem::exists(vtk));
  const std::string body = slurp(vtk);
  CHECK(body.find("DATASET STRUCTURED_GRID") != std::string::npos);
  CHECK(body.find("DIMENSIONS 3 3 1") != std::string::npos);
  CHECK(body.find("SCALARS field double 1") != std::string::npos);
}

TEST_CASE("export-matrices writes the operator family") {
  const auto dir = temp_dir("mtx");
  RunConfig rc = parse_run_config_text(R"(
[domain]
preset = "unit-square-grid"
nx = 2
cells = 4
refined_patches = [2]

[discretization]
degree = 2
)");
  rc.out_dir = dir.string();
  CHECK(cmd_export_matrices(rc) == 0);
  for (const char *name : {"G.mtx", "C.mtx", "M0.mtx", "M1.mtx", "M2.mtx",
                           "P0.mtx", "P0_hom.mtx", "P1.mtx", "P1_hom.mtx"})
    CHECK(std::filesystem::exists(dir / name));
  // one trace-operator family per interior edge, named by edge id
  int edge_files = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("edge", 0) == 0) ++edge_files;
  }
  CHECK(edge_files == 4 * 4); // 4 interior edges x {E0,R0,E1,R1}
}
