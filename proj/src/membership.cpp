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

#include "membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "grids.hpp"
#include "rng.hpp"
#include "spectral.hpp"

namespace qsi {

namespace {

// Points drawn log-uniformly from [1e-2, 1e2] with pairwise relative gaps of
// at least 5%, keeping divided differences well conditioned.
std::vector<double> draw_point_set(Rng& rng, int count) {
  std::vector<double> pts;
  pts.reserve(static_cast<size_t>(count));
  int attempts = 0;
  while (static_cast<int>(pts.size()) < count && attempts < 1000) {
    ++attempts;
    const double t = std::exp(std::log(1e-2) + rng.uniform() * (std::log(1e2) - std::log(1e-2)));
    bool ok = true;
    for (double s : pts)
      if (std::abs(t - s) < 0.05 * std::max(t, s)) {
        ok = false;
        break;
      }
    if (ok) pts.push_back(t);
  }
  return pts;
}

double central_derivative(const FisherFunction& f, double t) {
  const double h = std::max(1e-6, 1e-6 * t);
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace

MembershipReport verify_fop_membership(const FisherFunction& f, const MembershipConfig& config) {
  MembershipReport report;
  const double acc = f.eval_accuracy();

  report.normalization_residual = std::abs(f(1.0) - 1.0);
  report.normalization_ok = report.normalization_residual <= std::max(config.tol, 10.0 * acc);

  double func_res = 0.0;
  for (double t : logspace(1e-4, 1e4, config.grid_points)) {
    const double lhs = f(t);
    const double rhs = t * f(1.0 / t);
    func_res = std::max(func_res, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  report.functional_equation_residual = func_res;
  report.functional_equation_ok = func_res <= std::max(config.tol, 20.0 * acc);

  Rng rng(config.seed);
  double loewner_min = std::numeric_limits<double>::infinity();
  double min_gap = std::numeric_limits<double>::infinity();
  for (int s = 0; s < config.loewner_sets; ++s) {
    const int m = 2 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(
                                           std::max(1, config.max_points - 1)));
    const std::vector<double> pts = draw_point_set(rng, m);
    const int n = static_cast<int>(pts.size());
    if (n < 2) continue;

    std::vector<double> fvals(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) fvals[i] = f(pts[i]);

    ComplexMatrix loewner(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          loewner(i, j) = central_derivative(f, pts[static_cast<size_t>(i)]);
        } else {
          const double gap = pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)];
          min_gap = std::min(min_gap, std::abs(gap));
          loewner(i, j) =
              (fvals[static_cast<size_t>(i)] - fvals[static_cast<size_t>(j)]) / gap;
        }
      }
    }
    loewner_min =
        std::min(loewner_min, psd_min_eigenvalue(HermitianMatrix::trusted(hermitize(loewner))));
  }
  report.loewner_min_eigenvalue = loewner_min;

  double pair_min = std::numeric_limits<double>::infinity();
  for (int s = 0; s < config.matrix_pairs; ++s) {
    const int n = config.matrix_dim;
    const ComplexMatrix g = random_ginibre(n, rng);
    ComplexMatrix a = g * g.adjoint();
    a *= complexd(1.0 / n, 0.0);
    a += ComplexMatrix::identity(n) * complexd(0.1, 0.0);  // keep spectra away from zero
    const ComplexMatrix bump = random_ginibre(n, rng);
    ComplexMatrix b = a + bump * bump.adjoint() * complexd(0.5 / n, 0.0);

    const auto f_of = [&f](const ComplexMatrix& m) {
      return spectral_decompose(HermitianMatrix::trusted(m)).apply([&f](double x) { return f(x); });
    };
    const ComplexMatrix diff = f_of(b) - f_of(a);
    pair_min = std::min(pair_min, psd_min_eigenvalue(HermitianMatrix::trusted(hermitize(diff))));
  }
  report.matrix_pair_min_eigenvalue = pair_min;

  // Evaluation error propagates into divided differences as acc / gap.
  const double loewner_tol =
      std::max(config.tol, 20.0 * acc / std::max(min_gap, 1e-6) + 20.0 * acc);
  const double pair_tol = std::max(config.tol, 50.0 * acc);
  report.tolerance_used = std::max(loewner_tol, pair_tol);
  report.loewner_ok = loewner_min >= -loewner_tol;
  report.matrix_pair_ok = pair_min >= -pair_tol;
  return report;
}

}  // namespace qsi
