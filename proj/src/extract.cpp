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

#include "extract.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "errors.hpp"

namespace qsi {

namespace {

using complexd = std::complex<double>;

// -(1/pi) arg((1 - z0^p)(1 - z0^{1-p})) with principal powers. The product
// stays in the open lower half-plane for lambda in (0,1), so the principal
// argument is already continuous.
double wyd_boundary_value(double p, double lambda, double eps) {
  const complexd z0(-lambda, eps);
  const complexd prod = (1.0 - std::pow(z0, p)) * (1.0 - std::pow(z0, 1.0 - p));
  return -std::arg(prod) / M_PI;
}

// (1/pi) arg f(-lambda + i eps), the argument tracked continuously along a
// polar path from t = 1 (where arg f = 0) through the upper half-plane.
double generic_boundary_value(const FisherFunction& f, double lambda, double eps,
                              int path_steps) {
  const complexd target(-lambda, eps);
  const double r_target = std::abs(target);
  const double theta_target = std::arg(target);

  double tracked = 0.0;
  complexd f_prev = f.continuation(complexd(1.0, 0.0));
  for (int k = 1; k <= path_steps; ++k) {
    const double s = static_cast<double>(k) / path_steps;
    const complexd z = std::polar(std::pow(r_target, s), theta_target * s);
    const complexd fz = f.continuation(z);
    if (fz == complexd(0.0, 0.0))
      raise(ErrorCode::branch_tracking_failure, "continuation vanished on the tracking path");
    const double delta = std::arg(fz / f_prev);
    if (std::abs(delta) > 0.5 * M_PI)
      raise(ErrorCode::branch_tracking_failure,
            "phase step too large to unwrap; increase path_steps");
    tracked += delta;
    f_prev = fz;
  }
  return tracked / M_PI;
}

}  // namespace

double extract_weight(const FisherFunction& f, double lambda, const ExtractionConfig& config) {
  if (!(lambda > 0.0 && lambda < 1.0))
    raise(ErrorCode::domain_error, "extract_weight requires lambda in (0,1)");
  if (config.eps_ladder.empty())
    raise(ErrorCode::invalid_argument, "extraction ladder must not be empty");
  for (size_t i = 1; i < config.eps_ladder.size(); ++i)
    if (!(config.eps_ladder[i] < config.eps_ladder[i - 1] && config.eps_ladder[i] > 0.0))
      raise(ErrorCode::invalid_argument, "extraction ladder must be positive and descending");

  const bool is_wyd = f.kind() == FisherKind::wyd;
  if (!is_wyd && !f.has_continuation())
    raise(ErrorCode::unsupported_continuation,
          "weight extraction needs an analytic continuation, none for " + f.spec());

  std::vector<double> values;
  values.reserve(config.eps_ladder.size());
  for (double eps : config.eps_ladder)
    values.push_back(is_wyd ? wyd_boundary_value(f.param(), lambda, eps)
                            : generic_boundary_value(f, lambda, eps, config.path_steps));

  double h = values.back();
  if (values.size() >= 2) {
    const size_t n = values.size();
    const double ratio = config.eps_ladder[n - 2] / config.eps_ladder[n - 1];
    h = values[n - 1] + (values[n - 1] - values[n - 2]) / (ratio - 1.0);
  }
  return std::clamp(h, 0.0, 1.0);
}

}  // namespace qsi
