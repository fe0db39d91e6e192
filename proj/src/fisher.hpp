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

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "weights.hpp"

namespace qsi {

enum class FisherKind {
  elementary_min,   // 2t/(1+t)
  elementary_max,   // (1+t)/2
  elementary_sqrt,  // t^{1/2}
  wyd,              // p(1-p)(t-1)^2 / ((t^p-1)(t^{1-p}-1))
  weight_defined,   // evaluated by reconstruction from a weight function
  custom,           // arbitrary evaluator (test controls, order-theoretic results)
};

/// A normalized symmetric function on (0, infinity): f(1) = 1 and
/// f(t) = t f(1/t). Carries its zero limit f(0+), the regularity flag,
/// the closed-form weight when one is known, and an optional analytic
/// continuation to the cut plane. Immutable and cheap to copy.
class FisherFunction {
 public:
  static FisherFunction minimal();
  static FisherFunction maximal();
  static FisherFunction square_root();
  static FisherFunction wyd(double p);
  static FisherFunction bridge(double p);
  static FisherFunction from_weight(std::string name, WeightFunction h);
  static FisherFunction custom(std::string name, std::function<double(double)> eval,
                               std::optional<double> f_zero = std::nullopt,
                               std::optional<WeightFunction> weight = std::nullopt,
                               double eval_accuracy = 1e-13);

  double operator()(double t) const;

  const std::string& spec() const;
  FisherKind kind() const;
  double param() const;  // p for wyd/bridge, 0 otherwise

  double f_zero() const;
  bool regular() const;

  // f(0)/f(t); requires a regular function.
  double check_f(double t) const;

  // (t+1)/2 - (t-1)^2 f(0) / (2 f(t)); requires a regular function.
  double tilde_f(double t) const;

  // Morozova-Chentsov kernel 1/(y f(x/y)).
  double mc(double x, double y) const;

  // f(0)/(y f(x/y)); requires a regular function.
  double check_c(double x, double y) const;

  // (x+y)/f(0) - (x-y)^2 / (y f(x/y)); requires a regular function.
  double d_c(double x, double y) const;

  bool has_weight() const;
  const WeightFunction& weight() const;  // weight_unavailable when absent

  bool has_continuation() const;
  std::complex<double> continuation(std::complex<double> z) const;

  /// Rough absolute accuracy of a single evaluation; closed forms sit at
  /// rounding level, reconstructed functions at quadrature level.
  double eval_accuracy() const;

 private:
  struct Impl;
  explicit FisherFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Grammar: min | max | sqrt | wyd:<p> | bridge:<p>
/// with p in (0,1) for wyd and [0,1) for bridge.
FisherFunction parse_function_spec(const std::string& spec);

/// Limit at 0+ estimated from t in {1e-6, 1e-7, 1e-8} with a Richardson
/// extrapolation step, clamped at zero.
double numeric_zero_limit(const std::function<double(double)>& f);

/// Threshold below which an extrapolated f(0+) counts as zero.
inline constexpr double kRegularityThreshold = 1e-6;

}  // namespace qsi
