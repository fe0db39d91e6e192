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

// End-to-end acceptance runner: one line of output per criterion, exit code
// zero only when every criterion passes. The checks pin every tolerance in
// code; nothing is deferred to later calibration.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "density.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "fisher.hpp"
#include "grids.hpp"
#include "inequalities.hpp"
#include "membership.hpp"
#include "order.hpp"
#include "rng.hpp"
#include "skew.hpp"
#include "weights.hpp"

using namespace qsi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const std::vector<int> kDims = {2, 3, 4, 6};

// --- 1. basic inequality over 10k+ seeded trials --------------------------

Check criterion_basic_inequality() {
  Check check;
  const std::vector<std::string> specs = {"max",     "wyd:0.1", "wyd:0.3",
                                          "wyd:0.5", "wyd:0.7", "bridge:0.5"};
  int total_trials = 0;
  int combo = 0;
  for (const std::string& spec : specs) {
    const FisherFunction f = parse_function_spec(spec);
    for (int dim : kDims) {
      SuiteConfig config;
      config.dims = {dim};
      config.trials = 417;
      config.seed = derive_seed(20260101, static_cast<std::uint64_t>(combo++));
      config.tol = 1e-9;
      const InequalityReport report = run_basic_suite(f, config);
      total_trials += report.trials;
      check.require(report.passed, spec + " dim " + std::to_string(dim) + " worst margin " +
                                       fmt(report.worst_margin));
    }
  }
  check.require(total_trials >= 10000, "only " + std::to_string(total_trials) + " trials");
  return check;
}

// --- 2. kernel form vs direct power formula -------------------------------

Check criterion_oracle_equivalence() {
  Check check;
  int trial_index = 0;
  for (double p : {0.1, 0.25, 0.5, 0.75}) {
    const FisherFunction f = FisherFunction::wyd(p);
    for (int trial = 0; trial < 250; ++trial) {
      Rng rng(derive_seed(20260202, static_cast<std::uint64_t>(trial_index++)));
      const int dim = kDims[static_cast<size_t>(trial) % kDims.size()];
      const DensityMatrix rho = random_density(dim, rng);
      const HermitianMatrix a = HermitianMatrix::trusted(random_hermitian(dim, rng));
      const double via_kernel = skew_info(f, rho, a.matrix());
      const double direct = wyd_direct(p, rho, a);
      check.require(std::abs(via_kernel - direct) <= 1e-10 * (1.0 + std::abs(via_kernel)),
                    "p=" + fmt(p) + " gap " + fmt(via_kernel - direct));
    }
  }
  return check;
}

// --- 3. the two trace forms agree ------------------------------------------

Check criterion_form_equivalence() {
  Check check;
  const std::vector<std::string> specs = {"max",      "wyd:0.1",  "wyd:0.25",
                                          "wyd:0.5",  "wyd:0.75", "bridge:0.5"};
  int trial_index = 0;
  for (const std::string& spec : specs) {
    const FisherFunction f = parse_function_spec(spec);
    for (int trial = 0; trial < 167; ++trial) {
      Rng rng(derive_seed(20260303, static_cast<std::uint64_t>(trial_index++)));
      const int dim = kDims[static_cast<size_t>(trial) % kDims.size()];
      const DensityMatrix rho = random_density(dim, rng);
      const HermitianMatrix a = HermitianMatrix::trusted(random_hermitian(dim, rng));
      const double first_form = skew_info(f, rho, a.matrix());
      const double second_form = skew_info_alt(f, rho, a);
      check.require(std::abs(first_form - second_form) <=
                        1e-10 * (1.0 + std::abs(first_form)),
                    spec + " gap " + fmt(first_form - second_form));
    }
  }
  return check;
}

// --- 4. Gram-matrix and determinant inequalities ---------------------------

Check criterion_matrix_inequalities() {
  Check check;
  const std::vector<std::string> specs = {"max", "wyd:0.25", "wyd:0.5", "bridge:0.5"};
  int combo = 0;
  for (const std::string& spec : specs) {
    const FisherFunction f = parse_function_spec(spec);
    for (int k : {2, 3}) {
      SuiteConfig config;
      config.dims = {2, 3, 4};
      config.tuple_size = k;
      config.trials = 125;
      config.seed = derive_seed(20260404, static_cast<std::uint64_t>(combo++));
      config.tol = 1e-9;
      const InequalityReport gram = run_matrix_suite(f, config);
      check.require(gram.passed, spec + " k=" + std::to_string(k) + " Gram margin " +
                                     fmt(gram.worst_margin));
      const InequalityReport det = run_determinant_suite(f, config);
      check.require(det.passed, spec + " k=" + std::to_string(k) + " det margin " +
                                    fmt(det.worst_margin));
    }
  }
  return check;
}

// --- 5. canonical reconstruction -------------------------------------------

Check criterion_reconstruction() {
  Check check;
  for (double p : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const WeightFunction h = WeightFunction::wyd(p);
    const FisherFunction f = FisherFunction::wyd(p);
    for (double t : standard_t_grid()) {
      const double expected = f(t);
      const double rebuilt = reconstruct_f(h, t);
      check.require(std::abs(rebuilt - expected) <= 1e-6 * expected,
                    "f p=" + fmt(p) + " t=" + fmt(t) + " rel " +
                        fmt(std::abs(rebuilt - expected) / expected));
      const double expected_check = p * (1.0 - p) / expected;
      const double rebuilt_check = reconstruct_check_f(h, t);
      check.require(std::abs(rebuilt_check - expected_check) <= 1e-6 * expected_check,
                    "check_f p=" + fmt(p) + " t=" + fmt(t) + " rel " +
                        fmt(std::abs(rebuilt_check - expected_check) / expected_check));
    }
  }
  return check;
}

// --- 6. weight curve over p at fixed lambda --------------------------------

Check criterion_weight_curve() {
  Check check;
  const char* cli = std::getenv("QSI_CLI");
  if (cli == nullptr) {
    check.require(false, "QSI_CLI not set; cannot run the command line emitter");
    return check;
  }
  const std::string command = std::string(cli) + " figure1 --lambda 0.5 --p 0.02:0.98:33";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    check.require(false, "failed to launch " + command);
    return check;
  }
  std::string output;
  char buffer[256];
  while (fgets(buffer, sizeof(buffer), pipe) != nullptr) output += buffer;
  const int status = pclose(pipe);
  check.require(status == 0, "emitter exited with status " + std::to_string(status));

  std::istringstream lines(output);
  std::string line;
  std::getline(lines, line);
  check.require(line == "p,h_p_lambda", "unexpected header '" + line + "'");

  std::vector<double> ps, hs;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    ps.push_back(std::stod(line.substr(0, comma)));
    hs.push_back(std::stod(line.substr(comma + 1)));
  }
  check.require(ps.size() == 33, "expected 33 rows, got " + std::to_string(ps.size()));
  if (!check.ok) return check;

  // Symmetry about p = 1/2.
  for (size_t k = 0; k < ps.size(); ++k) {
    const size_t mirror = ps.size() - 1 - k;
    check.require(std::abs(hs[k] - hs[mirror]) <= 1e-12,
                  "symmetry gap " + fmt(hs[k] - hs[mirror]) + " at p=" + fmt(ps[k]));
  }

  // Strict monotonicity on the rising half of the p range: the weight falls
  // toward its minimum at p = 1/2 (and the information rises accordingly).
  for (size_t k = 0; k + 1 < ps.size() && ps[k + 1] <= 0.5 + 1e-12; ++k)
    check.require(hs[k + 1] < hs[k],
                  "not strictly monotone at p=" + fmt(ps[k + 1]));

  const double expected_mid = std::atan(2.0 * std::sqrt(2.0)) / M_PI;
  const size_t mid = ps.size() / 2;
  check.require(std::abs(ps[mid] - 0.5) <= 1e-12, "midpoint is not p=0.5");
  check.require(std::abs(hs[mid] - expected_mid) <= 1e-9,
                "midpoint value " + fmt(hs[mid]) + " vs " + fmt(expected_mid));

  const double spot = wyd_weight(0.5, 3.0 - 2.0 * std::sqrt(2.0));
  check.require(std::abs(spot - 0.25) <= 1e-9, "spot value " + fmt(spot));
  return check;
}

// --- 7. weight monotonicity in p and the induced order ---------------------

Check criterion_weight_monotonicity() {
  Check check;
  const std::vector<double> p_grid = linspace(0.1, 0.5, 9);
  const std::vector<double> lambdas = uniform_lambda_grid(64);
  for (size_t i = 0; i < p_grid.size(); ++i) {
    for (size_t j = i + 1; j < p_grid.size(); ++j) {
      for (double lambda : lambdas)
        check.require(wyd_weight(p_grid[i], lambda) >= wyd_weight(p_grid[j], lambda) - 1e-10,
                      "weights out of order at p=" + fmt(p_grid[i]) + ", q=" + fmt(p_grid[j]) +
                          ", lambda=" + fmt(lambda));
    }
  }

  OrderConfig config;
  config.method = OrderMethod::both;
  config.membership.loewner_sets = 120;
  config.membership.matrix_pairs = 20;
  for (size_t i = 0; i < p_grid.size(); ++i) {
    for (size_t j = i + 1; j < p_grid.size(); ++j) {
      try {
        const OrderVerdict verdict =
            preceq(FisherFunction::wyd(p_grid[i]), FisherFunction::wyd(p_grid[j]), config);
        check.require(verdict.holds, "order fails for p=" + fmt(p_grid[i]) + " vs q=" +
                                         fmt(p_grid[j]));
      } catch (const Error& e) {
        check.require(false, std::string("method disagreement: ") + e.what());
      }
    }
  }
  return check;
}

// --- 8. lattice structure and the involution --------------------------------

Check criterion_lattice_involution() {
  Check check;
  const FisherFunction fmin = FisherFunction::minimal();
  const FisherFunction fmax = FisherFunction::maximal();
  const FisherFunction root = FisherFunction::square_root();

  for (const FisherFunction& f :
       {FisherFunction::minimal(), FisherFunction::maximal(), FisherFunction::square_root(),
        FisherFunction::wyd(0.3), FisherFunction::bridge(0.5)}) {
    const FisherFunction twice = sharp(sharp(f));
    for (double t : standard_t_grid())
      check.require(std::abs(twice(t) - f(t)) <= 1e-12 * (1.0 + f(t)),
                    "sharp^2 drift for " + f.spec() + " at t=" + fmt(t));
  }

  const FisherFunction sharp_max = sharp(fmax);
  const FisherFunction sharp_root = sharp(root);
  for (double t : standard_t_grid()) {
    check.require(sharp_max(t) == fmin(t), "sharp(max) != min at t=" + fmt(t));
    check.require(std::abs(sharp_root(t) - root(t)) <= 1e-15 * root(t),
                  "sharp(sqrt) != sqrt at t=" + fmt(t));
  }

  const FisherFunction wy = FisherFunction::wyd(0.3);
  const FisherFunction sharp_wy = sharp(wy);
  for (double lambda : uniform_lambda_grid(33))
    check.require(std::abs(sharp_wy.weight()(lambda) - (1.0 - wy.weight()(lambda))) <= 1e-14,
                  "complement weight drift at lambda=" + fmt(lambda));

  const std::vector<std::pair<FisherFunction, FisherFunction>> pairs = {
      {FisherFunction::wyd(0.2), FisherFunction::wyd(0.4)},
      {FisherFunction::wyd(0.3), FisherFunction::bridge(0.5)},
      {FisherFunction::minimal(), FisherFunction::maximal()},
  };
  for (const auto& [f, g] : pairs) {
    const FisherFunction lower = meet(f, g);
    const FisherFunction upper = join(f, g);
    for (double t : standard_t_grid()) {
      const double lo = std::min(f(t), g(t));
      const double hi = std::max(f(t), g(t));
      const double slack = 2e-6 * (1.0 + hi);
      check.require(lower(t) <= lo + slack, "meet above min for " + lower.spec());
      check.require(upper(t) >= hi - slack, "join below max for " + upper.spec());
    }
  }

  // Order reversal under the involution, checked through the weights.
  OrderConfig weight_only;
  weight_only.method = OrderMethod::weight_comparison;
  const FisherFunction a = FisherFunction::wyd(0.3);
  const FisherFunction b = FisherFunction::wyd(0.5);
  check.require(preceq(a, b, weight_only).holds, "expected wyd(0.3) before wyd(0.5)");
  check.require(preceq(sharp(b), sharp(a), weight_only).holds,
                "expected sharp to reverse the order");
  check.require(!preceq(sharp(a), sharp(b), weight_only).holds,
                "sharp failed to reverse the strict order");
  return check;
}

// --- 9. p-monotonicity of the direct formula --------------------------------

Check criterion_p_monotonicity() {
  Check check;
  SuiteConfig config;
  config.dims = {2, 3, 4};
  config.trials = 100;
  config.seed = 20260909;
  config.tol = 1e-10;
  const InequalityReport report = run_pmono_suite(config);
  check.require(report.passed, "worst margin " + fmt(report.worst_margin));
  return check;
}

// --- 10. convexity, concavity, and the pure-state limit ---------------------

Check criterion_convexity_and_pure_limit() {
  Check check;
  int combo = 0;
  for (const std::string& spec : {"max", "wyd:0.25", "wyd:0.5", "bridge:0.5"}) {
    const FisherFunction f = parse_function_spec(spec);
    SuiteConfig config;
    config.dims = {2, 3, 4};
    config.trials = 250;
    config.seed = derive_seed(20261010, static_cast<std::uint64_t>(combo++));
    config.tol = 1e-10;
    const InequalityReport report = run_convexity_suite(f, config);
    check.require(report.passed, spec + " worst margin " + fmt(report.worst_margin));
  }

  const FisherFunction fmax = FisherFunction::maximal();
  Rng rng(20261011);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix projector = random_pure_projector(3, rng);
    ComplexMatrix a = random_hermitian(3, rng);
    a *= complexd(1.0 / a.frobenius_norm(), 0.0);

    double previous_gap = 0.0;
    bool first = true;
    for (double eps : epsilon_ladder()) {
      const DensityMatrix rho = smooth_density(projector, eps);
      const double gap = std::abs(variance(rho, a) - skew_info(fmax, rho, a));
      if (first) {
        check.require(gap <= 1e-2, "gap " + fmt(gap) + " at the top of the ladder");
        first = false;
      } else {
        check.require(gap <= previous_gap + 1e-9,
                      "gap failed to shrink along the ladder: " + fmt(gap) + " after " +
                          fmt(previous_gap));
      }
      previous_gap = gap;
    }
  }
  return check;
}

// --- 11. membership suite ----------------------------------------------------

Check criterion_membership() {
  Check check;
  MembershipConfig config;
  config.loewner_sets = 150;
  config.matrix_pairs = 30;
  const std::vector<std::string> catalog = {"min",     "max",     "sqrt",
                                            "wyd:0.1", "wyd:0.3", "wyd:0.5",
                                            "wyd:0.7", "bridge:0.3", "bridge:0.5"};
  for (const std::string& spec : catalog) {
    const MembershipReport report = verify_fop_membership(parse_function_spec(spec), config);
    check.require(report.consistent(), spec + " inconsistent (loewner " +
                                           fmt(report.loewner_min_eigenvalue) + ", pair " +
                                           fmt(report.matrix_pair_min_eigenvalue) + ")");
  }

  const FisherFunction square = FisherFunction::custom(
      "square", [](double t) { return t * t; }, 0.0, std::nullopt, 1e-14);
  const MembershipReport control = verify_fop_membership(square, config);
  check.require(!control.loewner_ok,
                "t^2 unexpectedly passed the divided-difference positivity test");
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "basic inequality, 10k+ seeded trials", criterion_basic_inequality},
      {2, "kernel form vs direct power formula", criterion_oracle_equivalence},
      {3, "equivalence of the two trace forms", criterion_form_equivalence},
      {4, "Gram and determinant inequalities", criterion_matrix_inequalities},
      {5, "canonical reconstruction from weights", criterion_reconstruction},
      {6, "weight curve over p at lambda = 1/2", criterion_weight_curve},
      {7, "weight monotonicity in p and induced order", criterion_weight_monotonicity},
      {8, "lattice operations and the involution", criterion_lattice_involution},
      {9, "p-monotonicity of the direct formula", criterion_p_monotonicity},
      {10, "convexity, concavity, pure-state limit", criterion_convexity_and_pure_limit},
      {11, "membership suite with negative control", criterion_membership},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.ok) ++failures;
    std::printf("criterion %2d [%s] %s%s%s\n", criterion.id, result.ok ? "PASS" : "FAIL",
                criterion.label, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
