// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpfeec/core/errors.hpp"
#include "mpfeec/splines/bernstein.hpp"
#include "mpfeec/splines/knot_insertion.hpp"
#include "mpfeec/splines/mass.hpp"
#include "mpfeec/splines/moments.hpp"
#include "mpfeec/splines/quadrature.hpp"
#include "mpfeec/splines/space.hpp"
#include "support/oracles.hpp"

using namespace mpfeec;

namespace {
UnivariateSpace make_space(int p, std::vector<double> breaks) {
  return UnivariateSpace(KnotVector::from_breakpoints(p, breaks));
}
UnivariateSpace uniform_space(int p, int cells) {
  return UnivariateSpace(KnotVector::uniform(p, cells));
}
} // namespace

TEST_CASE("basis evaluation at endpoints and midpoint, p=1") {
  const UnivariateSpace s = make_space(1, {0.0, 1.0});
  auto b0 = s.eval_basis(0.0);
  CHECK(b0.first == 0);
  CHECK(b0.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b0.values[1] == doctest::Approx(0.0).epsilon(1e-15));
  auto bh = s.eval_basis(0.5);
  CHECK(bh.values[0] == doctest::Approx(0.5));
  CHECK(bh.values[1] == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)s.eval_basis(1.5), ValidationError);
}

TEST_CASE("basis evaluation matches the naive recursion") {
  const UnivariateSpace s = make_space(2, {0.0, 0.5, 1.0});
  const auto &knots = s.knotvector().knots();
  const std::vector<double> all = s.eval_all(0.25);
  for (int i = 0; i < s.dim(); ++i)
    CHECK(all[i] ==
          doctest::Approx(oracles::deboor_basis(knots, i, 2, 0.25)).epsilon(1e-13));
  // sweep degrees and points
  for (int p = 1; p <= 5; ++p) {
    const UnivariateSpace sp = uniform_space(p, 5);
    for (double x : {0.0, 0.13, 0.2, 0.5, 0.77, 1.0}) {
      const std::vector<double> vals = sp.eval_all(x);
      for (int i = 0; i < sp.dim(); ++i)
        CHECK(vals[i] == doctest::Approx(oracles::deboor_basis(
                             sp.knotvector().knots(), i, p, x))
                             .epsilon(1e-12));
    }
  }
}

TEST_CASE("partition of unity at 1000 random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int p = 1; p <= 5; ++p) {
    const UnivariateSpace s = uniform_space(p, 7);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const auto b = s.eval_basis(unif(rng));
      double sum = 0.0;
      for (double v : b.values) {
        CHECK(v >= -1e-14);
        sum += v;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("endpoint interpolation") {
  for (int p = 1; p <= 4; ++p) {
    const UnivariateSpace s = uniform_space(p, 4);
    const auto v0 = s.eval_all(0.0);
    const auto v1 = s.eval_all(1.0);
    for (int i = 0; i < s.dim(); ++i) {
      CHECK(v0[i] == doctest::Approx(i == 0 ? 1.0 : 0.0).epsilon(1e-14));
      CHECK(v1[i] ==
            doctest::Approx(i == s.dim() - 1 ? 1.0 : 0.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("derivative coefficients") {
  SUBCASE("constants vanish") {
    const UnivariateSpace s = uniform_space(3, 5);
    std::vector<double> ones(s.dim(), 1.0);
    for (double d : derivative_coeffs(s, ones)) CHECK(d == 0.0);
  }
  SUBCASE("identity function has unit derivative") {
    const UnivariateSpace s = make_space(1, {0.0, 0.5, 1.0});
    const std::vector<double> c{0.0, 0.5, 1.0};
    const auto d = derivative_coeffs(s, c);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(1.0));
  }
  SUBCASE("matches centered finite differences") {
    const UnivariateSpace s = uniform_space(3, 6);
    const auto c = oracles::random_vector(s.dim(), 99);
    const auto d = derivative_coeffs(s, c);
    const UnivariateSpace ds = s.derivative_space();
    const double h = 1e-6;
    for (int k = 1; k <= 50; ++k) {
      const double x = k / 51.0;
      const double fd = (s.eval(c, x + h) - s.eval(c, x - h)) / (2 * h);
      CHECK(std::abs(ds.eval(d, x) - fd) <= 1e-5);
    }
  }
  SUBCASE("length mismatch is rejected") {
    const UnivariateSpace s = uniform_space(2, 4);
    std::vector<double> wrong(s.dim() + 1, 0.0);
    CHECK_THROWS_AS((void)derivative_coeffs(s, wrong), ValidationError);
  }
}

TEST_CASE("quadrature exactness on monomials up to 2p+1") {
  for (int p = 1; p <= 5; ++p) {
    const KnotVector kv = KnotVector::uniform(p, 4);
    const QuadratureRule quad(kv.breakpoints(), p + 1);
    for (int d = 0; d <= 2 * p + 1; ++d) {
      const double val = quad.integrate([d](double x) { return std::pow(x, d); });
      const double exact = 1.0 / (d + 1);
      CHECK(std::abs(val - exact) <= 1e-13 * std::abs(exact));
    }
  }
}

TEST_CASE("1d mass matrices") {
  SUBCASE("single-cell hats") {
    const UnivariateSpace s = make_space(1, {0.0, 1.0});
    const DenseMatrix m = mass_matrix_1d(s, s);
    CHECK(m(0, 0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(m(0, 1) == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(m(1, 0) == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(m(1, 1) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  }
  SUBCASE("symmetry") {
    const UnivariateSpace s = uniform_space(3, 5);
    const DenseMatrix m = mass_matrix_1d(s, s);
    double dev = 0.0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        dev = std::max(dev, std::abs(m(i, j) - m(j, i)));
    CHECK(dev <= 1e-14);
  }
  SUBCASE("row sums equal the basis integrals") {
    const UnivariateSpace s = uniform_space(2, 5);
    const DenseMatrix m = mass_matrix_1d(s, s);
    for (int i = 0; i < s.dim(); ++i) {
      double rowsum = 0.0;
      for (int j = 0; j < s.dim(); ++j) {
        CHECK(m(i, j) >= -1e-15);
        rowsum += m(i, j);
      }
      const double integral = oracles::simpson(
          [&](double x) { return s.eval_all(x)[i]; }, 0.0, 1.0, 4096);
      CHECK(rowsum == doctest::Approx(integral).epsilon(1e-8));
    }
  }
  SUBCASE("mixed-resolution product through knot insertion") {
    const UnivariateSpace coarse = uniform_space(3, 4);
    const UnivariateSpace fine = uniform_space(3, 8);
    const DenseMatrix mcf = mass_matrix_1d(coarse, fine);
    const DenseMatrix mff = mass_matrix_1d(fine, fine);
    const DenseMatrix e = knot_insertion_matrix(coarse, fine);
    const DenseMatrix viaE = e.transpose() * mff;
    double dev = 0.0;
    for (int i = 0; i < mcf.rows(); ++i)
      for (int j = 0; j < mcf.cols(); ++j)
        dev = std::max(dev, std::abs(mcf(i, j) - viaE(i, j)));
    CHECK(dev <= 1e-12);
  }
}

TEST_CASE("Bernstein moment polynomials") {
  CHECK(bernstein_basis(0, 0.3).empty());
  const auto q2a = bernstein_basis(2, 0.0);
  CHECK(q2a[0] == doctest::Approx(2.0));
  CHECK(q2a[1] == doctest::Approx(0.0));
  const auto q2b = bernstein_basis(2, 1.0);
  CHECK(q2b[0] == doctest::Approx(0.0));
  CHECK(q2b[1] == doctest::Approx(1.0));
  const auto q3 = bernstein_basis(3, 0.5);
  CHECK(q3[0] == doctest::Approx(0.75));
  CHECK(q3[1] == doctest::Approx(0.75));
  CHECK(q3[2] == doctest::Approx(0.25));
}

TEST_CASE("moment systems") {
  SUBCASE("r = 0 is empty") {
    const MomentSystem sys = moment_system(uniform_space(2, 4), 0);
    CHECK(sys.gamma.empty());
    CHECK(sys.vertex_moments.empty());
  }
  SUBCASE("three hats, r = 1") {
    const UnivariateSpace s = make_space(1, {0.0, 1.0 / 3, 2.0 / 3, 1.0});
    const MomentSystem sys = moment_system(s, 1);
    REQUIRE(sys.gamma.size() == 1);
    CHECK(sys.gamma[0] == doctest::Approx(0.5).epsilon(1e-13));
    // cross-check the two integrals with the independent integrator
    const double i0 =
        oracles::simpson([&](double x) { return s.eval_all(x)[0]; }, 0, 1);
    const double i1 =
        oracles::simpson([&](double x) { return s.eval_all(x)[1]; }, 0, 1);
    CHECK(i0 == doctest::Approx(1.0 / 6).epsilon(1e-9));
    CHECK(i1 == doctest::Approx(1.0 / 3).epsilon(1e-9));
  }
  SUBCASE("duality system is solved") {
    for (int p = 1; p <= 4; ++p) {
      const UnivariateSpace s = uniform_space(p, 5);
      for (int r = 0; r <= p + 1; ++r) {
        const MomentSystem sys = moment_system(s, r);
        for (int j = 0; j < r; ++j) {
          double lhs = 0.0;
          for (int m = 0; m < r; ++m) lhs += sys.duality(j, m) * sys.gamma[m];
          CHECK(std::abs(lhs - sys.vertex_moments[j]) <= 1e-12);
        }
      }
    }
  }
  SUBCASE("gamma is invariant under dyadic refinement and reversal") {
    const int p = 3, r = 4;
    const MomentSystem a = moment_system(uniform_space(p, 8), r);
    const MomentSystem b = moment_system(uniform_space(p, 16), r);
    const MomentSystem c =
        moment_system(UnivariateSpace(KnotVector::uniform(p, 8).reversed()), r);
    for (int m = 0; m < r; ++m) {
      CHECK(std::abs(a.gamma[m] - b.gamma[m]) <= 1e-10);
      CHECK(std::abs(a.gamma[m] - c.gamma[m]) <= 1e-10);
    }
  }
  SUBCASE("r beyond p + 1 is rejected") {
    CHECK_THROWS_AS((void)moment_system(uniform_space(2, 5), 4), ValidationError);
  }
}

TEST_CASE("knot insertion matrices") {
  SUBCASE("single split of linears") {
    const DenseMatrix e = knot_insertion_matrix(make_space(1, {0.0, 1.0}),
                                                make_space(1, {0.0, 0.5, 1.0}));
    REQUIRE(e.rows() == 3);
    REQUIRE(e.cols() == 2);
    CHECK(e(0, 0) == doctest::Approx(1.0));
    CHECK(e(0, 1) == doctest::Approx(0.0));
    CHECK(e(1, 0) == doctest::Approx(0.5));
    CHECK(e(1, 1) == doctest::Approx(0.5));
    CHECK(e(2, 0) == doctest::Approx(0.0));
    CHECK(e(2, 1) == doctest::Approx(1.0));
  }
  SUBCASE("identical spaces give the identity") {
    const UnivariateSpace s = uniform_space(3, 4);
    const DenseMatrix e = knot_insertion_matrix(s, s);
    for (int i = 0; i < e.rows(); ++i)
      for (int j = 0; j < e.cols(); ++j)
        CHECK(e(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
  }
  SUBCASE("pointwise reproduction across degrees and dyadic factors") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int p = 1; p <= 5; ++p) {
      for (int factor : {2, 4}) {
        const UnivariateSpace coarse = uniform_space(p, 3);
        const UnivariateSpace fine =
            UnivariateSpace(coarse.knotvector().refined(factor));
        const DenseMatrix e = knot_insertion_matrix(coarse, fine);
        for (int j = 0; j < e.rows(); ++j) {
          double rowsum = 0.0;
          for (int i = 0; i < e.cols(); ++i) {
            CHECK(e(j, i) >= -1e-14);
            rowsum += e(j, i);
          }
          CHECK(rowsum == doctest::Approx(1.0).epsilon(1e-13));
        }
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
          const double x = unif(rng);
          const auto cv = coarse.eval_all(x);
          const auto fv = fine.eval_all(x);
          for (int i = 0; i < coarse.dim(); ++i) {
            double viaE = 0.0;
            for (int j = 0; j < fine.dim(); ++j) viaE += e(j, i) * fv[j];
            worst = std::max(worst, std::abs(viaE - cv[i]));
          }
        }
        CHECK(worst <= 1e-12);
      }
    }
  }
  SUBCASE("non-nested spaces are rejected") {
    CHECK_THROWS_AS((void)knot_insertion_matrix(uniform_space(2, 3),
                                                uniform_space(2, 4)),
                    GeometryError);
    CHECK_THROWS_AS((void)knot_insertion_matrix(uniform_space(2, 4),
                                                uniform_space(3, 8)),
                    GeometryError);
  }
}
