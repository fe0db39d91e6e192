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
#include <cstdio>
#include <fstream>

#include "errors.hpp"
#include "extract.hpp"
#include "fisher.hpp"
#include "grids.hpp"
#include "weights.hpp"

using namespace qsi;

TEST_CASE("kernel values and sign") {
  for (double lambda : uniform_lambda_grid(9)) CHECK(weight_kernel(lambda, 1.0) == 0.0);
  CHECK(std::abs(weight_kernel(0.999999, 2.0)) <= 1e-5);
  CHECK(weight_kernel(0.5, 2.0) == doctest::Approx(-1.0 / 15.0).epsilon(1e-14));

  for (double lambda : uniform_lambda_grid(17))
    for (double t : standard_t_grid()) CHECK(weight_kernel(lambda, t) <= 0.0);

  try {
    weight_kernel(1.5, 2.0);
    FAIL("expected domain_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain_error);
  }
}

TEST_CASE("wyd weight closed form") {
  // 2 sqrt(lambda)/(1-lambda) = 1 at lambda = 3 - 2 sqrt 2, so the arctangent
  // is pi/4 there.
  const double lambda_quarter = 3.0 - 2.0 * std::sqrt(2.0);
  CHECK(wyd_weight(0.5, lambda_quarter) == doctest::Approx(0.25).epsilon(1e-13));

  const double at_half = std::atan(2.0 * std::sqrt(2.0)) / M_PI;
  CHECK(wyd_weight(0.5, 0.5) == doctest::Approx(at_half).epsilon(1e-14));

  for (double p : {0.1, 0.3, 0.45})
    for (double lambda : uniform_lambda_grid(11))
      CHECK(std::abs(wyd_weight(p, lambda) - wyd_weight(1.0 - p, lambda)) <= 1e-14);

  // Range: values stay within [0, 1] (in fact below 1/2).
  for (double p : {0.05, 0.25, 0.5, 0.75})
    for (double lambda : uniform_lambda_grid(31)) {
      const double h = wyd_weight(p, lambda);
      CHECK(h >= 0.0);
      CHECK(h <= 1.0);
    }
}

TEST_CASE("wyd weights fall as p rises toward 1/2") {
  const std::vector<double> ps = linspace(0.1, 0.5, 9);
  for (double lambda : uniform_lambda_grid(64))
    for (size_t i = 0; i + 1 < ps.size(); ++i)
      CHECK(wyd_weight(ps[i], lambda) >= wyd_weight(ps[i + 1], lambda) - 1e-10);
}

TEST_CASE("bridge step weight") {
  for (double lambda : uniform_lambda_grid(9)) {
    CHECK(bridge_weight(0.0, lambda) == 0.0);
    CHECK(bridge_weight(1.0, lambda) == 1.0);
  }
  CHECK(bridge_weight(0.4, 0.7) == doctest::Approx(0.4));
  CHECK(bridge_weight(0.4, 0.5) == 0.0);
}

TEST_CASE("reconstruction against closed forms") {
  const FisherFunction fmin = FisherFunction::minimal();
  const FisherFunction fmax = FisherFunction::maximal();

  SUBCASE("zero weight gives the maximal function exactly") {
    const WeightFunction zero = WeightFunction::constant(0.0);
    for (double t : standard_t_grid())
      CHECK(reconstruct_f(zero, t) == doctest::Approx(fmax(t)).epsilon(1e-14));
  }

  SUBCASE("unit weight gives the minimal function") {
    const WeightFunction one = WeightFunction::constant(1.0);
    for (double t : standard_t_grid())
      CHECK(std::abs(reconstruct_f(one, t) - fmin(t)) <= 1e-8 * (1.0 + fmin(t)));
  }

  SUBCASE("constant one-half gives the square root") {
    const WeightFunction half = WeightFunction::constant(0.5);
    for (double t : standard_t_grid())
      CHECK(std::abs(reconstruct_f(half, t) - std::sqrt(t)) <= 1e-8 * std::sqrt(t));
  }

  SUBCASE("wyd weights reproduce the wyd closed form") {
    for (double p : {0.1, 0.3, 0.5}) {
      const WeightFunction h = WeightFunction::wyd(p);
      const FisherFunction f = FisherFunction::wyd(p);
      for (double t : standard_t_grid())
        CHECK(std::abs(reconstruct_f(h, t) - f(t)) <= 1e-6 * f(t));
    }
  }
}

TEST_CASE("companion reconstruction of f(0)/f") {
  SUBCASE("zero weight") {
    const WeightFunction zero = WeightFunction::constant(0.0);
    for (double t : standard_t_grid())
      CHECK(reconstruct_check_f(zero, t) == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-12));
  }

  SUBCASE("wyd weights") {
    for (double p : {0.1, 0.3, 0.5}) {
      const WeightFunction h = WeightFunction::wyd(p);
      const FisherFunction f = FisherFunction::wyd(p);
      for (double t : standard_t_grid()) {
        const double expected = p * (1.0 - p) / f(t);
        CHECK(std::abs(reconstruct_check_f(h, t) - expected) <= 1e-6 * expected);
      }
    }
  }

  SUBCASE("non-vanishing weights are flagged non-integrable") {
    for (double v : {1.0, 0.5}) {
      try {
        reconstruct_check_f(WeightFunction::constant(v), 2.0);
        FAIL("expected integrability_failure");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::integrability_failure);
      }
    }
  }

  SUBCASE("step weights vanish near zero and integrate cleanly") {
    const WeightFunction step = WeightFunction::step(0.5);
    const double value = reconstruct_check_f(step, 1.0);
    CHECK(value > 0.0);
    CHECK(value < 1.0);
  }
}

TEST_CASE("weight zero limits") {
  for (double p : {0.2, 0.5}) {
    CHECK(std::abs(weight_f_zero(WeightFunction::wyd(p)) - p * (1.0 - p)) <= 1e-6);
  }
  const double expected_bridge = 0.5 * std::pow(4.0 * 0.5 / (1.5 * 1.5), 0.5);
  CHECK(std::abs(weight_f_zero(WeightFunction::step(0.5)) - expected_bridge) <= 1e-6);
  CHECK(weight_f_zero(WeightFunction::constant(1.0)) == 0.0);
}

TEST_CASE("reconstruction is monotone decreasing in the weight") {
  const WeightFunction lo = WeightFunction::wyd(0.5);   // smaller weight
  const WeightFunction hi = WeightFunction::wyd(0.2);   // larger weight
  for (double t : standard_t_grid())
    CHECK(reconstruct_f(hi, t) <= reconstruct_f(lo, t) + 1e-9);

  for (double t : {0.2, 1.0, 7.0}) {
    CHECK(reconstruct_f(WeightFunction::constant(1.0), t) <=
          reconstruct_f(WeightFunction::constant(0.3), t) + 1e-9);
    CHECK(reconstruct_f(WeightFunction::constant(0.3), t) <=
          reconstruct_f(WeightFunction::constant(0.0), t) + 1e-9);
  }
}

TEST_CASE("product of the two reconstructions is the zero limit") {
  const WeightFunction h = WeightFunction::wyd(0.3);
  for (double t : {0.05, 0.7, 1.0, 13.0})
    CHECK(std::abs(reconstruct_f(h, t) * reconstruct_check_f(h, t) - 0.21) <= 1e-7);
}

TEST_CASE("boundary-value extraction") {
  SUBCASE("elementary functions") {
    for (double lambda : {0.1, 0.5, 0.9}) {
      CHECK(std::abs(extract_weight(FisherFunction::maximal(), lambda) - 0.0) <= 1e-8);
      CHECK(std::abs(extract_weight(FisherFunction::minimal(), lambda) - 1.0) <= 1e-8);
      CHECK(std::abs(extract_weight(FisherFunction::square_root(), lambda) - 0.5) <= 1e-8);
    }
  }

  SUBCASE("wyd round trip against the closed form") {
    CHECK(std::abs(extract_weight(FisherFunction::wyd(0.5), 0.5) -
                   std::atan(2.0 * std::sqrt(2.0)) / M_PI) <= 1e-6);
    for (double p : {0.2, 0.35, 0.5}) {
      const FisherFunction f = FisherFunction::wyd(p);
      for (double lambda : linspace(0.05, 0.95, 19))
        CHECK(std::abs(extract_weight(f, lambda) - wyd_weight(p, lambda)) <= 1e-6);
    }
  }

  SUBCASE("functions without a continuation are rejected") {
    const FisherFunction bridge = FisherFunction::bridge(0.5);
    try {
      extract_weight(bridge, 0.5);
      FAIL("expected unsupported_continuation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::unsupported_continuation);
    }
  }
}

TEST_CASE("grid weights and CSV loading") {
  const std::string path = "test_weight_grid.csv";
  {
    std::ofstream out(path);
    out << "lambda,value\n0.2,0.1\n0.5,0.4\n0.8,0.2\n";
  }
  const WeightFunction grid = load_weight_csv(path);
  CHECK(grid(0.2) == doctest::Approx(0.1));
  CHECK(grid(0.35) == doctest::Approx(0.25));  // linear between knots
  CHECK(grid(0.05) == doctest::Approx(0.1));   // constant extension
  CHECK(grid(0.95) == doctest::Approx(0.2));
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "a,b\n0.2,0.1\n";
  }
  try {
    load_weight_csv(path);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
  }
  std::remove(path.c_str());

  try {
    load_weight_csv("definitely_missing.csv");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}

TEST_CASE("weight combinations") {
  const WeightFunction a = WeightFunction::wyd(0.3);
  const WeightFunction b = WeightFunction::step(0.5);
  const WeightFunction upper = WeightFunction::pointwise_max(a, b);
  const WeightFunction lower = WeightFunction::pointwise_min(a, b);
  const WeightFunction flip = WeightFunction::complement(a);
  for (double lambda : uniform_lambda_grid(21)) {
    CHECK(upper(lambda) == doctest::Approx(std::max(a(lambda), b(lambda))));
    CHECK(lower(lambda) == doctest::Approx(std::min(a(lambda), b(lambda))));
    CHECK(flip(lambda) == doctest::Approx(1.0 - a(lambda)));
  }
  CHECK(upper.breakpoints().size() == 1);  // the step's jump carries through
}

TEST_CASE("parse_weight_spec") {
  CHECK(parse_weight_spec("const:0.5")(0.3) == doctest::Approx(0.5));
  CHECK(parse_weight_spec("wydh:0.3")(0.4) == doctest::Approx(wyd_weight(0.3, 0.4)));
  CHECK(parse_weight_spec("steph:0.4")(0.7) == doctest::Approx(0.4));

  for (const char* bad : {"const:1.5", "wydh:0", "steph:2", "grid:", "nope:1", "wydh:x"}) {
    try {
      parse_weight_spec(bad);
      FAIL("expected failure for spec " << bad);
    } catch (const Error& e) {
      const bool expected =
          e.code() == ErrorCode::parse_error || e.code() == ErrorCode::io_error;
      CHECK(expected);
    }
  }
}
