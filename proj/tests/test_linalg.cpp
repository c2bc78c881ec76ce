// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/linalg/cg.hpp"
#include "mpfeec/linalg/eigs.hpp"
#include "mpfeec/linalg/factor.hpp"
#include "mpfeec/linalg/kernels.hpp"
#include "mpfeec/linalg/matrix_market.hpp"
#include "support/oracles.hpp"

using namespace mpfeec;

namespace {

SparseMatrix random_sparse(index_t rows, index_t cols, double density,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  TripletBuffer buf(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j)
      if (keep(rng)) buf.add(i, j, unif(rng));
  return buf.build();
}

SparseMatrix random_spd(index_t n, std::uint64_t seed) {
  const SparseMatrix a = random_sparse(n, n, 0.1, seed);
  SparseMatrix ata = multiply(a.transpose(), a);
  return add(ata, 1.0, SparseMatrix::identity(n), static_cast<double>(n));
}

} // namespace

TEST_CASE("kernel variants agree") {
  const auto &scalar = kernels::scalar_ops();
  const auto &active = kernels::active_ops();
  INFO("active kernel set: ", active.name);
  const auto x = oracles::random_vector(1003, 1);
  const auto y = oracles::random_vector(1003, 2);
  CHECK(std::abs(scalar.dot(x.data(), y.data(), x.size()) -
                 active.dot(x.data(), y.data(), x.size())) <= 1e-12);
  CHECK(std::abs(scalar.nrm2_sq(x.data(), x.size()) -
                 active.nrm2_sq(x.data(), x.size())) <= 1e-12);
  auto ya = y, yb = y;
  scalar.axpy(0.37, x.data(), ya.data(), ya.size());
  active.axpy(0.37, x.data(), yb.data(), yb.size());
  for (std::size_t i = 0; i < ya.size(); ++i)
    CHECK(ya[i] == doctest::Approx(yb[i]).epsilon(1e-14));
  auto xa = x, xb = x;
  scalar.scale(-1.7, xa.data(), xa.size());
  active.scale(-1.7, xb.data(), xb.size());
  for (std::size_t i = 0; i < xa.size(); ++i) CHECK(xa[i] == xb[i]);
  std::vector<std::int64_t> cols(257);
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = (7 * i) % x.size();
  const auto vals = oracles::random_vector(cols.size(), 3);
  CHECK(std::abs(scalar.csr_row_dot(vals.data(), cols.data(), cols.size(),
                                    x.data()) -
                 active.csr_row_dot(vals.data(), cols.data(), cols.size(),
                                    x.data())) <= 1e-12);
}

TEST_CASE("sparse algebra against the dense oracle") {
  const SparseMatrix a = random_sparse(60, 45, 0.15, 10);
  const SparseMatrix b = random_sparse(45, 70, 0.15, 11);
  SUBCASE("A times identity") {
    const SparseMatrix ai = multiply(a, SparseMatrix::identity(45));
    CHECK(add(ai, 1.0, a, -1.0).max_abs() == 0.0);
  }
  SUBCASE("double transpose") {
    CHECK(add(a.transpose().transpose(), 1.0, a, -1.0).max_abs() == 0.0);
  }
  SUBCASE("associativity on vectors") {
    const auto x = oracles::random_vector(70, 12);
    const auto bx = b * x;
    const auto abx = a * bx;
    const auto ab = multiply(a, b);
    const auto abx2 = ab * x;
    double scale = 0.0, dev = 0.0;
    for (std::size_t i = 0; i < abx.size(); ++i) {
      scale = std::max(scale, std::abs(abx[i]));
      dev = std::max(dev, std::abs(abx[i] - abx2[i]));
    }
    CHECK(dev <= 1e-13 * std::max(1.0, scale));
  }
  SUBCASE("product matches the dense oracle") {
    const auto dd = oracles::matmul(oracles::to_dense(a), oracles::to_dense(b));
    const auto ab = oracles::to_dense(multiply(a, b));
    double dev = 0.0;
    for (std::size_t i = 0; i < dd.size(); ++i)
      for (std::size_t j = 0; j < dd[0].size(); ++j)
        dev = std::max(dev, std::abs(dd[i][j] - ab[i][j]));
    CHECK(dev <= 1e-13);
  }
  SUBCASE("add with scalars") {
    const SparseMatrix c = random_sparse(60, 45, 0.15, 13);
    const auto s = oracles::to_dense(add(a, 2.0, c, -0.5));
    const auto da = oracles::to_dense(a);
    const auto dc = oracles::to_dense(c);
    double dev = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s[0].size(); ++j)
        dev = std::max(dev, std::abs(s[i][j] - (2.0 * da[i][j] - 0.5 * dc[i][j])));
    CHECK(dev <= 1e-15);
  }
  SUBCASE("explicit zeros are pruned") {
    TripletBuffer buf(3, 3);
    buf.add(0, 0, 1.0);
    buf.add(1, 1, 0.0);
    buf.add(2, 0, 0.5);
    buf.add(2, 0, -0.5);
    const SparseMatrix m = buf.build();
    CHECK(m.nnz() == 1);
  }
}

TEST_CASE("direct SPD solves") {
  SUBCASE("identity") {
    const auto b = oracles::random_vector(20, 21);
    const auto x = solve_spd(SparseMatrix::identity(20), b);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(x[i] == doctest::Approx(b[i]));
  }
  SUBCASE("diagonal") {
    TripletBuffer buf(5, 5);
    for (int i = 0; i < 5; ++i) buf.add(i, i, i + 1.0);
    const auto b = oracles::random_vector(5, 22);
    const auto x = solve_spd(buf.build(), b);
    for (int i = 0; i < 5; ++i) CHECK(x[i] == doctest::Approx(b[i] / (i + 1.0)));
  }
  SUBCASE("random SPD vs the dense oracle") {
    const SparseMatrix a = random_spd(100, 23);
    const auto b = oracles::random_vector(100, 24);
    const auto x = solve_spd(a, b);
    const auto xd = oracles::dense_gauss_solve(oracles::to_dense(a), b);
    for (std::size_t i = 0; i < b.size(); ++i)
      CHECK(std::abs(x[i] - xd[i]) <= 1e-10 * std::max(1.0, std::abs(xd[i])));
  }
  SUBCASE("residual tolerance") {
    const SparseMatrix a = random_spd(80, 25);
    const auto b = oracles::random_vector(80, 26);
    const auto x = SparseFactorization(a, SparseFactorization::Kind::SPD).solve(b);
    auto r = a * x;
    double rn = 0, bn = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rn += (r[i] - b[i]) * (r[i] - b[i]);
      bn += b[i] * b[i];
    }
    CHECK(std::sqrt(rn) <= 1e-11 * std::sqrt(bn));
  }
  SUBCASE("indefinite matrices are rejected by the SPD path") {
    TripletBuffer buf(2, 2);
    buf.add(0, 0, 1.0);
    buf.add(1, 1, -1.0);
    CHECK_THROWS_AS(SparseFactorization(buf.build(),
                                        SparseFactorization::Kind::SPD),
                    NumericalError);
  }
}

TEST_CASE("conjugate gradients fallback") {
  const SparseMatrix a = random_spd(120, 31);
  const auto b = oracles::random_vector(120, 32);
  const CgResult res = cg_solve(a, b, 1e-12, 2000);
  CHECK(res.converged);
  const auto xd = oracles::dense_gauss_solve(oracles::to_dense(a), b);
  for (std::size_t i = 0; i < b.size(); ++i)
    CHECK(std::abs(res.x[i] - xd[i]) <= 1e-8 * std::max(1.0, std::abs(xd[i])));
}

TEST_CASE("generalized eigensolver") {
  SUBCASE("diagonal pencil, shift 3.2") {
    TripletBuffer a(10, 10);
    for (int i = 0; i < 10; ++i) a.add(i, i, i + 1.0);
    const EigenResult res =
        generalized_eigs(a.build(), SparseMatrix::identity(10), 3, 3.2);
    REQUIRE(res.eigenvalues.size() == 3);
    CHECK(res.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(res.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(res.eigenvalues[2] == doctest::Approx(4.0).epsilon(1e-10));
  }
  SUBCASE("random pencil vs the dense fallback") {
    const SparseMatrix a = random_spd(60, 41);
    const SparseMatrix b = random_spd(60, 42);
    const EigenResult lanczos = generalized_eigs(a, b, 5, 0.0);
    const EigenResult dense = dense_generalized_eigs(a, b, 5, 0.0);
    REQUIRE(lanczos.eigenvalues.size() == 5);
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(lanczos.eigenvalues[i] - dense.eigenvalues[i]) <=
            1e-9 * std::max(1.0, std::abs(dense.eigenvalues[i])));
      CHECK(lanczos.residuals[i] <=
            1e-8 * std::max(1.0, std::abs(lanczos.eigenvalues[i])));
    }
    // B-orthonormality of the returned vectors
    for (int i = 0; i < 5; ++i) {
      const auto bi = b * lanczos.eigenvectors[i];
      for (int j = 0; j < 5; ++j) {
        double dot = 0.0;
        for (std::size_t kidx = 0; kidx < bi.size(); ++kidx)
          dot += lanczos.eigenvectors[j][kidx] * bi[kidx];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-8);
      }
    }
  }
  SUBCASE("eigenvalues repeat across shifts") {
    const SparseMatrix a = random_spd(50, 43);
    const SparseMatrix b = random_spd(50, 44);
    const EigenResult r1 = generalized_eigs(a, b, 4, 0.0);
    EigsOptions opts;
    opts.seed = 777;
    const EigenResult r2 =
        generalized_eigs(a, b, 4, 0.5 * r1.eigenvalues[1], opts);
    for (int i = 0; i < 2; ++i)
      CHECK(std::abs(r1.eigenvalues[i] - r2.eigenvalues[i]) <=
            1e-8 * std::max(1.0, r1.eigenvalues[i]));
  }
  SUBCASE("singular shift reports an error") {
    TripletBuffer a(6, 6);
    for (int i = 0; i < 6; ++i) a.add(i, i, 2.0);
    CHECK_THROWS_AS(generalized_eigs(a.build(), SparseMatrix::identity(6), 2,
                                     2.0),
                    NumericalError);
  }
}

TEST_CASE("matrix market round trip") {
  const SparseMatrix a = random_sparse(17, 23, 0.2, 51);
  std::stringstream ss;
  write_matrix_market(ss, a);
  const SparseMatrix b = read_matrix_market(ss);
  CHECK(add(a, 1.0, b, -1.0).max_abs() == 0.0);
}
