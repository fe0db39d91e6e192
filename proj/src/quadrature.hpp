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

#pragma once

#include <functional>
#include <vector>

namespace qsi {

struct QuadratureConfig {
  int max_subdivisions = 40;      // maximum bisection depth per segment
  int panel_order = 16;           // Gauss-Legendre points per panel
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double endpoint_exponent = 2.0; // substitution power for integrable endpoint singularities
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed
/// by Newton iteration on the Legendre recurrence and cached per order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_rule(int order);

/// Adaptive panel integration of f over [a, b]. Panels never straddle an
/// interior breakpoint, so integrands with jumps stay exact panel-wise.
/// Refinement always splits the panel with the largest error estimate;
/// exceeding the depth limit before the tolerance is met raises
/// quadrature_failure.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& interior_breakpoints,
                           const QuadratureConfig& config = QuadratureConfig{});

}  // namespace qsi
