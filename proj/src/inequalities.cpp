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

#include "inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "errors.hpp"
#include "grids.hpp"
#include "rng.hpp"

namespace qsi {

namespace {

using ordered_json = nlohmann::ordered_json;

struct MarginTracker {
  InequalityReport report;
  double tol = 1e-9;

  void record(double margin, std::uint64_t trial_seed, const std::string& digest) {
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -tol) report.violations.push_back(Violation{trial_seed, margin, digest});
  }

  InequalityReport finish() {
    report.passed = report.violations.empty();
    return report;
  }
};

MarginTracker make_tracker(const std::string& suite, const std::string& function_spec,
                           std::vector<int> dims, int trials, std::uint64_t seed, double tol) {
  MarginTracker tracker;
  tracker.tol = tol;
  tracker.report.suite = suite;
  tracker.report.function_spec = function_spec;
  tracker.report.dims = std::move(dims);
  tracker.report.trials = trials;
  tracker.report.seed = seed;
  tracker.report.worst_margin = std::numeric_limits<double>::infinity();
  return tracker;
}

MarginTracker make_suite_tracker(const std::string& suite, const std::string& function_spec,
                                 const SuiteConfig& config) {
  return make_tracker(suite, function_spec, config.dims, config.trials, config.seed, config.tol);
}

void require_config(const SuiteConfig& config) {
  if (config.trials < 1) raise(ErrorCode::invalid_argument, "trials must be >= 1");
  if (!(config.tol > 0.0)) raise(ErrorCode::invalid_argument, "tolerance must be positive");
  if (config.dims.empty()) raise(ErrorCode::invalid_argument, "dims must not be empty");
  for (int d : config.dims)
    if (d < 2) raise(ErrorCode::invalid_argument, "dims must be >= 2");
  if (config.tuple_size < 1) raise(ErrorCode::invalid_argument, "tuple size must be >= 1");
}

int trial_dim(const SuiteConfig& config, int trial) {
  return config.dims[static_cast<size_t>(trial) % config.dims.size()];
}

ComplexMatrix draw_observable(int dim, Rng& rng, bool hermitian) {
  return hermitian ? random_hermitian(dim, rng) : random_ginibre(dim, rng);
}

std::vector<ComplexMatrix> draw_tuple(int dim, int k, Rng& rng, bool hermitian) {
  std::vector<ComplexMatrix> tuple;
  tuple.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) tuple.push_back(draw_observable(dim, rng, hermitian));
  return tuple;
}

std::string tuple_digest(const DensityMatrix& rho, const std::vector<ComplexMatrix>& tuple) {
  std::vector<const ComplexMatrix*> ptrs = {&rho.matrix()};
  for (const ComplexMatrix& m : tuple) ptrs.push_back(&m);
  return digest_inputs(ptrs);
}

// --- normalized margins shared by the single-instance checks and the
// --- randomized suites

std::vector<double> basic_margins(const FisherFunction& f, const DensityMatrix& rho,
                                  const ComplexMatrix& a) {
  const double info = skew_info(f, rho, a);
  const double var = variance(rho, a);
  const double scale = 1.0 + std::abs(var);
  return {info / scale, (var - info) / scale};
}

double matrix_margin(const FisherFunction& f, const DensityMatrix& rho,
                     const std::vector<ComplexMatrix>& tuple) {
  const GramPair grams = gram_pair(f, rho, tuple);
  const double min_eig =
      psd_min_eigenvalue(HermitianMatrix::trusted(grams.cov_gram - grams.skew_gram));
  return min_eig / (1.0 + std::abs(grams.cov_gram.trace().real()));
}

std::vector<double> determinant_margins(const FisherFunction& f, const DensityMatrix& rho,
                                        const std::vector<ComplexMatrix>& tuple) {
  const GramPair grams = gram_pair(f, rho, tuple);
  const double det_skew = hermitian_determinant(HermitianMatrix::trusted(grams.skew_gram));
  const double det_cov = hermitian_determinant(HermitianMatrix::trusted(grams.cov_gram));
  const double scale = 1.0 + std::max(std::abs(det_skew), std::abs(det_cov));
  return {det_skew / scale, (det_cov - det_skew) / scale};
}

std::vector<double> pmono_margins(const DensityMatrix& rho, const HermitianMatrix& a,
                                  const std::vector<double>& p_grid) {
  std::vector<double> values(p_grid.size());
  double magnitude = 0.0;
  for (size_t i = 0; i < p_grid.size(); ++i) {
    values[i] = wyd_direct(p_grid[i], rho, a);
    magnitude = std::max(magnitude, std::abs(values[i]));
  }
  const double scale = 1.0 + magnitude;
  std::vector<double> margins;
  margins.reserve(p_grid.size());
  for (size_t i = 0; i + 1 < p_grid.size(); ++i) {
    // Rising flank through 1/2, falling flank after.
    const double step =
        p_grid[i + 1] <= 0.5 ? values[i + 1] - values[i] : values[i] - values[i + 1];
    margins.push_back(step / scale);
  }
  return margins;
}

void require_ascending_grid(const std::vector<double>& p_grid) {
  if (p_grid.size() < 2) raise(ErrorCode::invalid_argument, "p grid needs at least two points");
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0 && p_grid[i] < 1.0))
      raise(ErrorCode::invalid_argument, "p grid must lie in (0,1)");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      raise(ErrorCode::invalid_argument, "p grid must be ascending");
  }
}

}  // namespace

std::string digest_inputs(const std::vector<const ComplexMatrix*>& inputs) {
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
  const auto mix = [&hash](double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    __builtin_memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      hash ^= (bits >> (8 * b)) & 0xffULL;
      hash *= 1099511628211ULL;
    }
  };
  for (const ComplexMatrix* m : inputs) {
    mix(static_cast<double>(m->dim()));
    for (const complexd& e : m->entries()) {
      mix(e.real());
      mix(e.imag());
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

InequalityReport verify_basic(const FisherFunction& f, const DensityMatrix& rho,
                              const ComplexMatrix& a, double tol) {
  MarginTracker tracker = make_tracker("basic", f.spec(), {rho.dim()}, 1, 0, tol);
  const std::string digest = digest_inputs({&rho.matrix(), &a});
  for (double margin : basic_margins(f, rho, a)) tracker.record(margin, 0, digest);
  return tracker.finish();
}

InequalityReport verify_matrix_inequality(const FisherFunction& f, const DensityMatrix& rho,
                                          const std::vector<ComplexMatrix>& tuple, double tol) {
  MarginTracker tracker = make_tracker("matrix", f.spec(), {rho.dim()}, 1, 0, tol);
  tracker.record(matrix_margin(f, rho, tuple), 0, tuple_digest(rho, tuple));
  return tracker.finish();
}

InequalityReport verify_determinant(const FisherFunction& f, const DensityMatrix& rho,
                                    const std::vector<ComplexMatrix>& tuple, double tol) {
  MarginTracker tracker = make_tracker("det", f.spec(), {rho.dim()}, 1, 0, tol);
  const std::string digest = tuple_digest(rho, tuple);
  for (double margin : determinant_margins(f, rho, tuple)) tracker.record(margin, 0, digest);
  return tracker.finish();
}

InequalityReport verify_p_monotonicity(const DensityMatrix& rho, const HermitianMatrix& a,
                                       const std::vector<double>& p_grid, double tol) {
  require_ascending_grid(p_grid);
  MarginTracker tracker = make_tracker("pmono", "wyd", {rho.dim()}, 1, 0, tol);
  const std::string digest = digest_inputs({&rho.matrix(), &a.matrix()});
  for (double margin : pmono_margins(rho, a, p_grid)) tracker.record(margin, 0, digest);
  return tracker.finish();
}

InequalityReport run_basic_suite(const FisherFunction& f, const SuiteConfig& config) {
  require_config(config);
  MarginTracker tracker = make_suite_tracker("basic", f.spec(), config);
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    const int dim = trial_dim(config, trial);
    const DensityMatrix rho = random_density(dim, rng);
    const ComplexMatrix a = draw_observable(dim, rng, trial % 2 == 0);
    const std::string digest = digest_inputs({&rho.matrix(), &a});
    for (double margin : basic_margins(f, rho, a)) tracker.record(margin, trial_seed, digest);
  }
  return tracker.finish();
}

InequalityReport run_matrix_suite(const FisherFunction& f, const SuiteConfig& config) {
  require_config(config);
  MarginTracker tracker = make_suite_tracker("matrix", f.spec(), config);
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    const int dim = trial_dim(config, trial);
    const DensityMatrix rho = random_density(dim, rng);
    const std::vector<ComplexMatrix> tuple =
        draw_tuple(dim, config.tuple_size, rng, trial % 2 == 0);
    tracker.record(matrix_margin(f, rho, tuple), trial_seed, tuple_digest(rho, tuple));
  }
  return tracker.finish();
}

InequalityReport run_determinant_suite(const FisherFunction& f, const SuiteConfig& config) {
  require_config(config);
  MarginTracker tracker = make_suite_tracker("det", f.spec(), config);
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    const int dim = trial_dim(config, trial);
    const DensityMatrix rho = random_density(dim, rng);
    const std::vector<ComplexMatrix> tuple =
        draw_tuple(dim, config.tuple_size, rng, trial % 2 == 0);
    const std::string digest = tuple_digest(rho, tuple);
    for (double margin : determinant_margins(f, rho, tuple))
      tracker.record(margin, trial_seed, digest);
  }
  return tracker.finish();
}

InequalityReport run_pmono_suite(const SuiteConfig& config) {
  require_config(config);
  MarginTracker tracker = make_suite_tracker("pmono", "wyd", config);
  const std::vector<double>& grid = default_p_grid();
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    const int dim = trial_dim(config, trial);
    const DensityMatrix rho = random_density(dim, rng);
    const HermitianMatrix a = HermitianMatrix::trusted(random_hermitian(dim, rng));
    const std::string digest = digest_inputs({&rho.matrix(), &a.matrix()});
    for (double margin : pmono_margins(rho, a, grid)) tracker.record(margin, trial_seed, digest);
  }
  return tracker.finish();
}

InequalityReport run_convexity_suite(const FisherFunction& f, const SuiteConfig& config) {
  require_config(config);
  MarginTracker tracker = make_suite_tracker("convexity", f.spec(), config);
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    const int dim = trial_dim(config, trial);
    const DensityMatrix rho1 = random_density(dim, rng);
    const DensityMatrix rho2 = random_density(dim, rng);
    const double s = rng.uniform();
    const ComplexMatrix a = draw_observable(dim, rng, trial % 2 == 0);
    const DensityMatrix mix = validate_density(rho1.matrix() * complexd(s, 0.0) +
                                               rho2.matrix() * complexd(1.0 - s, 0.0));

    const double info_mix = skew_info(f, mix, a);
    const double info_split = s * skew_info(f, rho1, a) + (1.0 - s) * skew_info(f, rho2, a);
    const double var_mix = variance(mix, a);
    const double var_split = s * variance(rho1, a) + (1.0 - s) * variance(rho2, a);

    const std::string digest = digest_inputs({&rho1.matrix(), &rho2.matrix(), &a});
    tracker.record((info_split - info_mix) / (1.0 + std::abs(info_split)), trial_seed, digest);
    tracker.record((var_mix - var_split) / (1.0 + std::abs(var_split)), trial_seed, digest);
  }
  return tracker.finish();
}

InequalityReport run_suite(const std::string& name, const FisherFunction& f,
                           const SuiteConfig& config) {
  if (name == "basic") return run_basic_suite(f, config);
  if (name == "matrix") return run_matrix_suite(f, config);
  if (name == "det") return run_determinant_suite(f, config);
  if (name == "pmono") return run_pmono_suite(config);
  if (name == "convexity") return run_convexity_suite(f, config);
  raise(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

std::string InequalityReport::to_json() const {
  ordered_json j;
  j["suite"] = suite;
  j["function_spec"] = function_spec;
  j["dims"] = dims;
  j["trials"] = trials;
  j["seed"] = seed;
  j["worst_margin"] = worst_margin;
  ordered_json v = ordered_json::array();
  for (const Violation& violation : violations) {
    ordered_json item;
    item["seed"] = violation.seed;
    item["margin"] = violation.margin;
    item["inputs_digest"] = violation.inputs_digest;
    v.push_back(item);
  }
  j["violations"] = v;
  j["passed"] = passed;
  return j.dump();
}

}  // namespace qsi
