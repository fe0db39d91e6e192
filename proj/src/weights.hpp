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

#include <memory>
#include <string>
#include <vector>

#include "quadrature.hpp"

namespace qsi {

/// Closed-form weight of the Wigner-Yanase-Dyson representing function:
///   h_p(lambda) = (1/pi) * arctan[(l^p + l^{1-p}) sin(p pi) /
///                                 (1 - l - (l^p - l^{1-p}) cos(p pi))]
/// The two-argument arctangent keeps the value in [0, 1] across the
/// denominator's sign change.
double wyd_weight(double p, double lambda);

/// Step weight of the bridge family: 0 below lambda = 1-p, p from there on.
double bridge_weight(double p, double lambda);

/// Integrand factor of the exponential representation
///   f(t) = (1+t)/2 * exp( Int_0^1 K(lambda, t) h(lambda) dlambda ),
///   K(lambda, t) = (lambda^2 - 1)(1 - t)^2
///                  / ((lambda + t)(1 + lambda t)(1 + lambda)^2).
/// Non-positive everywhere on (0,1) x (0,inf).
double weight_kernel(double lambda, double t);

/// Measurable weight h : (0,1) -> [0,1]. Closed forms, steps, tabulated
/// grids, and pointwise min/max/complement combinations thereof.
class WeightFunction {
 public:
  static WeightFunction constant(double value);
  static WeightFunction wyd(double p);
  static WeightFunction step(double p);
  static WeightFunction grid(std::vector<double> knots, std::vector<double> values,
                             std::string label = "grid");
  static WeightFunction pointwise_max(const WeightFunction& a, const WeightFunction& b);
  static WeightFunction pointwise_min(const WeightFunction& a, const WeightFunction& b);
  static WeightFunction complement(const WeightFunction& h);  // 1 - h

  double operator()(double lambda) const;

  /// Interior discontinuities and kinks; quadrature panels split here.
  const std::vector<double>& breakpoints() const;

  const std::string& spec() const;

 private:
  struct Node;
  explicit WeightFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// f(t) from the weight via adaptive quadrature of the exponential
/// representation.
double reconstruct_f(const WeightFunction& h, double t,
                     const QuadratureConfig& config = QuadratureConfig{});

/// f(0)/f(t) via the companion representation
///   (1/(1+t)) * exp( Int_0^1 t(lambda^2-1) / (lambda(lambda+t)(1+lambda t))
///                    h(lambda) dlambda ),
/// valid when Int h(lambda)/lambda dlambda is finite. The lambda -> 0 end is
/// handled by the substitution lambda = u^e; the exponent is raised
/// automatically when h vanishes slowly. A numerically divergent
/// h(lambda)/lambda integral raises integrability_failure.
double reconstruct_check_f(const WeightFunction& h, double t,
                           const QuadratureConfig& config = QuadratureConfig{});

/// f(0) for a weight-defined function, computed as
/// reconstruct_f(h,t) * reconstruct_check_f(h,t) at t = 1e-8 (the product is
/// t-independent). Returns 0 for weights whose h/lambda integral diverges.
double weight_f_zero(const WeightFunction& h,
                     const QuadratureConfig& config = QuadratureConfig{});

/// CSV with required header "lambda,value"; knots in (0,1), values clamped
/// to [0,1], piecewise-linear in between, constant beyond the end knots.
WeightFunction load_weight_csv(const std::string& path);

/// Grammar: const:<v> | wydh:<p> | steph:<p> | grid:<file.csv>
WeightFunction parse_weight_spec(const std::string& spec);

}  // namespace qsi
