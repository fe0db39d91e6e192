// Copyright 2026 The qsi developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "grids.hpp"
#include "quadrature.hpp"

using namespace qsi;

TEST_CASE("Gauss-Legendre rules") {
  for (int order : {4, 8, 16}) {
    const GaussLegendreRule& rule = gauss_legendre_rule(order);
    REQUIRE(rule.nodes.size() == static_cast<size_t>(order));

    double weight_sum = 0.0;
    for (double w : rule.weights) weight_sum += w;
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));

    // Exact for polynomials up to degree 2*order - 1.
    for (int degree : {0, 2, 2 * order - 2}) {
      double sum = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * std::pow(rule.nodes[i], degree);
      CHECK(sum == doctest::Approx(2.0 / (degree + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("adaptive integration of known integrals") {
  QuadratureConfig config;

  const QuadratureResult poly =
      integrate([](double x) { return 3.0 * x * x; }, 0.0, 1.0, {}, config);
  CHECK(poly.value == doctest::Approx(1.0).epsilon(1e-13));

  const QuadratureResult osc =
      integrate([](double x) { return std::sin(20.0 * x); }, 0.0, M_PI, {}, config);
  CHECK(osc.value == doctest::Approx((1.0 - std::cos(20.0 * M_PI)) / 20.0).epsilon(1e-11));

  // Integrable endpoint behavior: sqrt has a cusp at zero.
  const QuadratureResult cusp =
      integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, {}, config);
  CHECK(cusp.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("breakpoints keep discontinuities exact") {
  QuadratureConfig config;
  const auto step = [](double x) { return x < 0.3 ? 0.0 : 2.0; };

  const QuadratureResult with_break = integrate(step, 0.0, 1.0, {0.3}, config);
  CHECK(with_break.value == doctest::Approx(1.4).epsilon(1e-14));
  // The split panels never straddle the jump, so a handful of panels suffice.
  CHECK(with_break.panels <= 8);
}

TEST_CASE("failure modes and configuration invariants") {
  QuadratureConfig config;

  SUBCASE("non-integrable singularities run out of subdivisions") {
    config.max_subdivisions = 20;
    try {
      integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {}, config);
      FAIL("expected quadrature_failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::quadrature_failure);
    }
  }

  SUBCASE("panel order below four is rejected") {
    config.panel_order = 3;
    try {
      integrate([](double) { return 1.0; }, 0.0, 1.0, {}, config);
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_argument);
    }
  }

  SUBCASE("tolerances must be positive") {
    config.abs_tol = 0.0;
    try {
      integrate([](double) { return 1.0; }, 0.0, 1.0, {}, config);
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_argument);
    }
  }

  SUBCASE("empty interval is rejected") {
    try {
      integrate([](double) { return 1.0; }, 1.0, 1.0, {}, config);
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_argument);
    }
  }
}

TEST_CASE("grid builders") {
  const std::vector<double> lin = linspace(0.0, 1.0, 5);
  CHECK(lin.size() == 5);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 1.0);
  CHECK(lin[2] == doctest::Approx(0.5));

  const std::vector<double> log = logspace(0.01, 100.0, 5);
  CHECK(log.front() == 0.01);
  CHECK(log.back() == 100.0);
  CHECK(log[2] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(standard_t_grid().size() == 40);
  CHECK(standard_t_grid().front() == 0.01);
  CHECK(standard_t_grid().back() == 100.0);

  const std::vector<double>& order_grid = order_lambda_grid();
  CHECK(order_grid.size() == 512);
  for (size_t i = 0; i < order_grid.size(); ++i) {
    CHECK(order_grid[i] > 0.0);
    CHECK(order_grid[i] < 1.0);
    if (i > 0) CHECK(order_grid[i] > order_grid[i - 1]);
  }
  // Chebyshev clustering reaches much closer to the ends than the uniform part.
  CHECK(order_grid.front() < 1e-4);
  CHECK(order_grid.back() > 1.0 - 1e-4);

  const std::vector<double>& p_grid = default_p_grid();
  CHECK(p_grid.size() == 33);
  CHECK(p_grid.front() == doctest::Approx(0.02));
  CHECK(p_grid.back() == doctest::Approx(0.98));
  CHECK(p_grid[16] == 0.5);  // pinned exactly

  try {
    linspace(0.0, 1.0, 0);
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  try {
    logspace(-1.0, 1.0, 3);
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}
