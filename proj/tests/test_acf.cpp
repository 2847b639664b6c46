/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/acf.hpp"
#include "core/spectral.hpp"
#include "test_util.hpp"

using namespace planar_ar;
using test_util::draw_causal;
using test_util::draw_stationary;
using test_util::make_rng;

namespace {

const ParamSet kTable{-0.1, 0.5, 0.2, 0.72};

// the worked 7x6 autocovariance table: rows h2 = 3..-3, columns h1 = -2..3
const double kTableAcf[7][6] = {
    {0.0, 0.0, 0.125, 0.1125, 0.0225, -0.00225},
    {0.0, 0.0, 0.25, 0.15, 0.0075, -0.003},
    {0.0, 0.0, 0.5, 0.15, -0.015, 0.0015},
    {0.0, 0.0, 1.0, 0.0, 0.0, 0.0},
    {-0.015, 0.15, 0.5, 0.0, 0.0, 0.0},
    {0.0075, 0.15, 0.25, 0.0, 0.0, 0.0},
    {0.0225, 0.1125, 0.125, 0.0, 0.0, 0.0},
};

double table_value(long h1, long h2) { return kTableAcf[3 - h2][h1 + 2]; }

}  // namespace

TEST_CASE("axis coefficients") {
  AxisCoefficients ax = axis_coefficients(kTable);
  CHECK(ax.alpha == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ax.beta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ax.sqrt_d == doctest::Approx(0.72).epsilon(1e-14));
  CHECK(ax.variance == doctest::Approx(1.0).epsilon(1e-14));

  AxisCoefficients wn = axis_coefficients({0, 0, 0, 1.7});
  CHECK(wn.alpha == 0.0);
  CHECK(wn.beta == 0.0);
  CHECK(wn.variance == doctest::Approx(1.7).epsilon(1e-15));

  AxisCoefficients ar1 = axis_coefficients({0.5, 0, 0, 1.0});
  CHECK(ar1.alpha == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ar1.beta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ar1.variance == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(axis_coefficients({0.5, 0.5, 0.5, 1.0}), Error);
}

TEST_CASE("axis decay rates stay below one for stationary draws") {
  auto rng = make_rng(61);
  for (int t = 0; t < 1000; ++t) {
    ParamSet p = draw_stationary(rng);
    AxisCoefficients ax = axis_coefficients(p);
    CHECK(std::abs(ax.alpha) < 1.0);
    CHECK(std::abs(ax.beta) < 1.0);
  }
}

TEST_CASE("axis autocovariances") {
  CHECK(acf_axis(kTable, 3, Axis::Second) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(acf_axis(kTable, 2, Axis::First) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(acf_axis(kTable, 0, Axis::First) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(acf_axis({0.3, -0.2, 0.1, 2.0}, 0, Axis::Second) ==
        doctest::Approx(2.0 / std::sqrt(discriminant({0.3, -0.2, 0.1, 2.0}))).epsilon(1e-14));
}

TEST_CASE("worked table reproduced by the causal closed form") {
  for (long h1 = -2; h1 <= 3; ++h1)
    for (long h2 = -3; h2 <= 3; ++h2)
      CHECK(acf_causal(kTable, h1, h2) ==
            doctest::Approx(table_value(h1, h2)).epsilon(1e-12));
}

TEST_CASE("acf_causal rejects non-causal parameters with guidance") {
  try {
    acf_causal({-2.5, 0.5, 5.0, 18.0}, 1, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Noncausal);
    CHECK(std::string(e.what()).find("acf_grid") != std::string::npos);
  }
  CHECK_THROWS_AS(acf_causal({0.5, 0.5, 0.5, 1.0}, 0, 0), Error);
}

TEST_CASE("grid over the worked window") {
  AcfGrid g = acf_grid(kTable, -2, 3, -3, 3);
  for (long h1 = -2; h1 <= 3; ++h1)
    for (long h2 = -3; h2 <= 3; ++h2)
      CHECK(g.at(h1, h2) == doctest::Approx(table_value(h1, h2)).epsilon(1e-12));
}

TEST_CASE("grid of the paired parameterization is identical") {
  AcfGrid g1 = acf_grid(kTable, -2, 3, -3, 3);
  AcfGrid g2 = acf_grid({-2.5, 0.5, 5.0, 18.0}, -2, 3, -3, 3);
  for (long h1 = -2; h1 <= 3; ++h1)
    for (long h2 = -3; h2 <= 3; ++h2)
      CHECK(std::abs(g1.at(h1, h2) - g2.at(h1, h2)) < 1e-10);
}

TEST_CASE("white-noise grid is a delta") {
  AcfGrid g = acf_grid({0, 0, 0, 2.0}, -4, 4, -4, 4);
  for (long h1 = -4; h1 <= 4; ++h1)
    for (long h2 = -4; h2 <= 4; ++h2)
      CHECK(g.at(h1, h2) == ((h1 == 0 && h2 == 0) ? 2.0 : 0.0));
}

TEST_CASE("grid symmetry is exact and the origin dominates") {
  auto rng = make_rng(67);
  for (int t = 0; t < 25; ++t) {
    ParamSet p = draw_stationary(rng);
    AcfGrid g = acf_grid(p, -4, 4, -4, 4);
    CHECK(g.at(0, 0) > 0.0);
    for (long h1 = -4; h1 <= 4; ++h1)
      for (long h2 = -4; h2 <= 4; ++h2) {
        CHECK(g.at(h1, h2) == g.at(-h1, -h2));  // bit-exact
        CHECK(g.at(0, 0) >= std::abs(g.at(h1, h2)));
      }
  }
}

TEST_CASE("grid window validation") {
  CHECK_THROWS_AS(acf_grid(kTable, 2, 1, 0, 0), Error);
  CHECK_THROWS_AS(acf_grid(kTable, 0, 20000, 0, 0), Error);
  CHECK_THROWS_AS(acf_grid({0.5, 0.5, 0.5, 1.0}, 0, 1, 0, 1), Error);
  AcfGrid g = acf_grid(kTable, 0, 1, 0, 1);
  CHECK_THROWS_AS(g.at(5, 5), Error);
}

TEST_CASE("Yule-Walker residuals") {
  AcfGrid g = acf_grid(kTable, -3, 3, -3, 3);
  CHECK(yw_residual(kTable, g, 0, 0) == doctest::Approx(0.72).epsilon(1e-13));
  CHECK(yw_residual(kTable, g, 2, 1) == doctest::Approx(0.0).epsilon(1e-13));

  AcfGrid wn = acf_grid({0, 0, 0, 1.0}, -2, 2, -2, 2);
  CHECK(yw_residual({0, 0, 0, 1.0}, wn, 1, 1) == 0.0);

  CHECK_THROWS_AS(yw_residual(kTable, g, -3, 0), Error);  // needs lag (-4, 0)

  auto rng = make_rng(71);
  for (int t = 0; t < 25; ++t) {
    ParamSet p = draw_causal(rng, 0.05);
    AcfGrid gp = acf_grid(p, -7, 6, -7, 6);
    CHECK(std::abs(yw_residual(p, gp, 0, 0) - p.sigma2) < 1e-10);
    for (long h1 = -6; h1 <= 6; ++h1)
      for (long h2 = -6; h2 <= 6; ++h2) {
        if (std::max(h1, h2) <= 0) continue;
        CHECK(std::abs(yw_residual(p, gp, h1, h2)) < 1e-10);
      }
  }
}

TEST_CASE("causal product identity at the mixed corner") {
  auto rng = make_rng(73);
  for (int t = 0; t < 100; ++t) {
    ParamSet p = draw_causal(rng, 0.05);
    AcfGrid g = acf_grid(p, -1, 1, -1, 1);
    CHECK(std::abs(g.at(1, -1) * g.at(0, 0) - g.at(1, 0) * g.at(0, 1)) <=
          1e-12 * g.at(0, 0) * g.at(0, 0));
    CHECK(std::abs(g.at(1, 0)) < g.at(0, 0));
    CHECK(std::abs(g.at(0, 1)) < g.at(0, 0));
  }
}

TEST_CASE("grids are invariant across the equivalence class") {
  auto check_class = [](const ParamSet& p) {
    AcfGrid base = acf_grid(p, -3, 3, -3, 3);
    for (const auto& member : equivalence_class(p).members) {
      AcfGrid g = acf_grid(member.params, -3, 3, -3, 3);
      for (long h1 = -3; h1 <= 3; ++h1)
        for (long h2 = -3; h2 <= 3; ++h2)
          CHECK(std::abs(base.at(h1, h2) - g.at(h1, h2)) < 1e-10);
    }
  };
  check_class(kTable);                  // generic two-member class
  check_class({0.3, 0.4, -0.12, 1.0});  // symmetric four-member class
  check_class({0.5, 0.0, 0.0, 1.0});    // single-coefficient class
  check_class({0.0, -0.7, 0.0, 2.0});
}

TEST_CASE("separable closed form in the symmetric case") {
  ParamSet sym{0.3, 0.4, -0.12, 1.0};
  CHECK(acf_separable(sym, 2, 1) ==
        doctest::Approx(0.3 * 0.3 * 0.4 / (0.91 * 0.84)).epsilon(1e-13));
  // |a| > 1 flips the exponent sign so the power decays
  ParamSet wide{2.0, 0.5, -1.0, 1.0};
  CHECK(acf_separable(wide, 1, 0) == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
  CHECK(acf_separable(sym, 0, 0) ==
        doctest::Approx(sym.sigma2 / std::sqrt(discriminant(sym))).epsilon(1e-12));

  CHECK_THROWS_AS(acf_separable({0.3, 0.4, 0.0, 1.0}, 0, 0), Error);  // c != -ab
  CHECK_THROWS_AS(acf_separable({1.0, 0.4, -0.4, 1.0}, 0, 0), Error);

  // agreement with the general path everywhere, plus the product identity
  auto rng = make_rng(79);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int t = 0; t < 20; ++t) {
    double a = u(rng), b = u(rng);
    ParamSet p{a, b, -a * b, 1.3};
    AcfGrid g = acf_grid(p, -3, 3, -3, 3);
    for (long h1 = -3; h1 <= 3; ++h1)
      for (long h2 = -3; h2 <= 3; ++h2) {
        CHECK(std::abs(g.at(h1, h2) - acf_separable(p, h1, h2)) < 1e-12 * g.at(0, 0));
        CHECK(std::abs(g.at(h1, h2) * g.at(0, 0) - g.at(h1, 0) * g.at(0, h2)) <
              1e-12 * g.at(0, 0) * g.at(0, 0));
      }
  }
}

TEST_CASE("transect-uncorrelated parameters kill the first-axis covariances") {
  auto rng = make_rng(83);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int t = 0; t < 20; ++t) {
    double b = u(rng), c = u(rng);
    ParamSet p{-b * c, b, c, 1.0};
    if (!(discriminant(p) > 0)) continue;
    AcfGrid g = acf_grid(p, -4, 4, 0, 0);
    for (long h1 = -4; h1 <= 4; ++h1)
      if (h1 != 0) CHECK(std::abs(g.at(h1, 0)) < 1e-14 * g.at(0, 0));
  }
}

TEST_CASE("product structure classification") {
  CHECK(classify_product_structure(kTable) == ProductStructure::MultiplicativeOppositeQuadrant);
  CHECK(classify_product_structure({0.3, 0.4, -0.12, 1.0}) ==
        ProductStructure::FullyMultiplicative);
  CHECK(classify_product_structure({-2.5, 0.5, 5.0, 18.0}) ==
        ProductStructure::MultiplicativeOppositeQuadrant);
  CHECK(classify_product_structure({-10.0, 2.0, 5.0, 1.0}) ==
        ProductStructure::MultiplicativeSameQuadrant);
  CHECK_THROWS_AS(classify_product_structure({0.5, 0.5, 0.5, 1.0}), Error);
  // 1 + c^2 = a^2 + b^2 with ab + c != 0 forces D <= 0, so the boundary label
  // is unreachable through the stationarity gate
  CHECK_THROWS_AS(classify_product_structure({0.6, 0.8, 0.0, 1.0}), Error);
}

TEST_CASE("classification matches the grid identities") {
  auto rng = make_rng(89);
  for (int t = 0; t < 50; ++t) {
    ParamSet p = draw_stationary(rng);
    AcfGrid g = acf_grid(p, -1, 1, -1, 1);
    const double v = g.at(0, 0);
    const double prod = g.at(1, 0) * g.at(0, 1) / v;
    switch (classify_product_structure(p)) {
      case ProductStructure::FullyMultiplicative:
        CHECK(std::abs(g.at(1, -1) - prod) < 1e-10 * v);
        CHECK(std::abs(g.at(1, 1) - prod) < 1e-10 * v);
        break;
      case ProductStructure::MultiplicativeOppositeQuadrant:
        CHECK(std::abs(g.at(1, -1) - prod) < 1e-10 * v);
        CHECK(std::abs(g.at(1, 1) - prod) > 1e-10 * v);
        break;
      case ProductStructure::MultiplicativeSameQuadrant:
        CHECK(std::abs(g.at(1, 1) - prod) < 1e-10 * v);
        CHECK(std::abs(g.at(1, -1) - prod) > 1e-10 * v);
        break;
      case ProductStructure::BoundaryUnclassified:
        FAIL("boundary case should not arise for D > 0");
    }
  }
}

TEST_CASE("closed form against the quadrature oracle") {
  auto rng = make_rng(97);
  for (int t = 0; t < 20; ++t) {
    ParamSet p = draw_causal(rng, 0.05);
    AcfGrid g = acf_grid(p, -3, 3, -3, 3);
    AcfQuadratureOracle oracle(p, {1024, QuadratureRule::Trapezoid});
    for (long h1 = -3; h1 <= 3; ++h1)
      for (long h2 = -3; h2 <= 3; ++h2)
        CHECK(std::abs(g.at(h1, h2) - oracle.value(h1, h2)) < 1e-6);
  }
}

TEST_CASE("non-causal stationary grids against the oracle") {
  // one-axis-flip patterns exercise the canonicalize-then-flip path
  for (const ParamSet& p : {ParamSet{2.0, -0.1, -0.05, 1.0}, ParamSet{-10.0, 2.0, 5.0, 1.0},
                            ParamSet{0.2, 3.0, 0.4, 1.0}}) {
    REQUIRE(discriminant(p) > 0.0);
    AcfGrid g = acf_grid(p, -3, 3, -3, 3);
    AcfQuadratureOracle oracle(p, {1024, QuadratureRule::Trapezoid});
    for (long h1 = -3; h1 <= 3; ++h1)
      for (long h2 = -3; h2 <= 3; ++h2)
        CHECK(std::abs(g.at(h1, h2) - oracle.value(h1, h2)) < 1e-6);
  }
}
