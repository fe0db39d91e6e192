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

#include "fisher.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace qsi {

namespace {

using complexd = std::complex<double>;

std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void require_positive(double t) {
  if (!(t > 0.0)) raise(ErrorCode::domain_error, "argument must be positive");
}

// Second-order factor of the expansion t^a - 1 = a u (1 + (a-1)u/2 +
// (a-1)(a-2)u^2/6 + O(u^3)) about t = 1, with u = t - 1.
double power_bracket(double a, double u) {
  return 1.0 + (a - 1.0) * u * (0.5 + (a - 2.0) * u / 6.0);
}

double wyd_eval(double p, double t) {
  const double u = t - 1.0;
  if (std::abs(u) < 1e-4) {
    // The removable singularity at t = 1: divide out u^2 analytically.
    return 1.0 / (power_bracket(p, u) * power_bracket(1.0 - p, u));
  }
  const double lt = std::log(t);
  return p * (1.0 - p) * u * u / (std::expm1(p * lt) * std::expm1((1.0 - p) * lt));
}

}  // namespace

struct FisherFunction::Impl {
  FisherKind kind = FisherKind::custom;
  double p = 0.0;
  std::string spec;
  double f_zero = 0.0;
  bool regular = false;
  std::optional<WeightFunction> weight;
  std::function<double(double)> eval;
  std::function<complexd(complexd)> continuation;
  double accuracy = 1e-13;
  QuadratureConfig quad;
};

FisherFunction FisherFunction::minimal() {
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::elementary_min;
  impl->spec = "min";
  impl->f_zero = 0.0;
  impl->regular = false;
  impl->weight = WeightFunction::constant(1.0);
  impl->eval = [](double t) { return 2.0 * t / (1.0 + t); };
  impl->continuation = [](complexd z) { return 2.0 * z / (1.0 + z); };
  return FisherFunction(impl);
}

FisherFunction FisherFunction::maximal() {
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::elementary_max;
  impl->spec = "max";
  impl->f_zero = 0.5;
  impl->regular = true;
  impl->weight = WeightFunction::constant(0.0);
  impl->eval = [](double t) { return (1.0 + t) / 2.0; };
  impl->continuation = [](complexd z) { return (1.0 + z) / 2.0; };
  return FisherFunction(impl);
}

FisherFunction FisherFunction::square_root() {
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::elementary_sqrt;
  impl->spec = "sqrt";
  impl->f_zero = 0.0;
  impl->regular = false;
  impl->weight = WeightFunction::constant(0.5);
  impl->eval = [](double t) { return std::sqrt(t); };
  impl->continuation = [](complexd z) { return std::sqrt(z); };
  return FisherFunction(impl);
}

FisherFunction FisherFunction::wyd(double p) {
  if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::domain_error, "wyd requires p in (0,1)");
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::wyd;
  impl->p = p;
  impl->spec = "wyd:" + format_param(p);
  impl->f_zero = p * (1.0 - p);
  impl->regular = true;
  impl->weight = WeightFunction::wyd(p);
  impl->eval = [p](double t) { return wyd_eval(p, t); };
  impl->continuation = [p](complexd z) {
    const complexd zm1 = z - 1.0;
    return p * (1.0 - p) * zm1 * zm1 /
           ((std::pow(z, p) - 1.0) * (std::pow(z, 1.0 - p) - 1.0));
  };
  return FisherFunction(impl);
}

FisherFunction FisherFunction::bridge(double p) {
  if (!(p >= 0.0 && p < 1.0)) raise(ErrorCode::domain_error, "bridge requires p in [0,1)");
  return from_weight("bridge:" + format_param(p), WeightFunction::step(p));
}

FisherFunction FisherFunction::from_weight(std::string name, WeightFunction h) {
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::weight_defined;
  impl->spec = std::move(name);
  impl->weight = std::move(h);
  impl->f_zero = weight_f_zero(*impl->weight, impl->quad);
  impl->regular = impl->f_zero > kRegularityThreshold;
  impl->accuracy = 3e-9;
  const WeightFunction weight = *impl->weight;
  const QuadratureConfig quad = impl->quad;
  impl->eval = [weight, quad](double t) { return reconstruct_f(weight, t, quad); };
  return FisherFunction(impl);
}

FisherFunction FisherFunction::custom(std::string name, std::function<double(double)> eval,
                                      std::optional<double> f_zero,
                                      std::optional<WeightFunction> weight,
                                      double eval_accuracy) {
  auto impl = std::make_shared<Impl>();
  impl->kind = FisherKind::custom;
  impl->spec = std::move(name);
  impl->eval = std::move(eval);
  impl->f_zero = f_zero ? *f_zero : numeric_zero_limit(impl->eval);
  impl->regular = impl->f_zero > kRegularityThreshold;
  impl->weight = std::move(weight);
  impl->accuracy = eval_accuracy;
  return FisherFunction(impl);
}

double FisherFunction::operator()(double t) const {
  require_positive(t);
  return impl_->eval(t);
}

const std::string& FisherFunction::spec() const { return impl_->spec; }
FisherKind FisherFunction::kind() const { return impl_->kind; }
double FisherFunction::param() const { return impl_->p; }
double FisherFunction::f_zero() const { return impl_->f_zero; }
bool FisherFunction::regular() const { return impl_->regular; }
double FisherFunction::eval_accuracy() const { return impl_->accuracy; }

double FisherFunction::check_f(double t) const {
  if (!impl_->regular)
    raise(ErrorCode::not_regular, "check_f requires a regular function, got " + impl_->spec);
  require_positive(t);
  return impl_->f_zero / impl_->eval(t);
}

double FisherFunction::tilde_f(double t) const {
  if (!impl_->regular)
    raise(ErrorCode::not_regular, "tilde_f requires a regular function, got " + impl_->spec);
  require_positive(t);
  const double tm1 = t - 1.0;
  return 0.5 * (t + 1.0) - tm1 * tm1 * impl_->f_zero / (2.0 * impl_->eval(t));
}

double FisherFunction::mc(double x, double y) const {
  require_positive(x);
  require_positive(y);
  return 1.0 / (y * impl_->eval(x / y));
}

double FisherFunction::check_c(double x, double y) const {
  if (!impl_->regular)
    raise(ErrorCode::not_regular, "check_c requires a regular function, got " + impl_->spec);
  return impl_->f_zero * mc(x, y);
}

double FisherFunction::d_c(double x, double y) const {
  if (!impl_->regular)
    raise(ErrorCode::not_regular, "d_c requires a regular function, got " + impl_->spec);
  require_positive(x);
  require_positive(y);
  const double diff = x - y;
  return (x + y) / impl_->f_zero - diff * diff * mc(x, y);
}

bool FisherFunction::has_weight() const { return impl_->weight.has_value(); }

const WeightFunction& FisherFunction::weight() const {
  if (!impl_->weight)
    raise(ErrorCode::weight_unavailable, "no weight function known for " + impl_->spec);
  return *impl_->weight;
}

bool FisherFunction::has_continuation() const { return static_cast<bool>(impl_->continuation); }

complexd FisherFunction::continuation(complexd z) const {
  if (!impl_->continuation)
    raise(ErrorCode::unsupported_continuation,
          "no analytic continuation available for " + impl_->spec);
  return impl_->continuation(z);
}

FisherFunction parse_function_spec(const std::string& spec) {
  if (spec == "min") return FisherFunction::minimal();
  if (spec == "max") return FisherFunction::maximal();
  if (spec == "sqrt") return FisherFunction::square_root();

  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  if (head == "wyd" || head == "bridge") {
    double p = 0.0;
    try {
      size_t used = 0;
      p = std::stod(tail, &used);
      if (used != tail.size() || tail.empty()) throw std::invalid_argument("trailing garbage");
    } catch (const std::exception&) {
      raise(ErrorCode::parse_error, "cannot parse parameter in function spec '" + spec + "'");
    }
    if (head == "wyd") {
      if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::parse_error, "p out of range for wyd (0,1)");
      return FisherFunction::wyd(p);
    }
    if (!(p >= 0.0 && p < 1.0)) raise(ErrorCode::parse_error, "p out of range for bridge [0,1)");
    return FisherFunction::bridge(p);
  }
  raise(ErrorCode::parse_error, "unknown function spec '" + spec + "'");
}

double numeric_zero_limit(const std::function<double(double)>& f) {
  const double v1 = f(1e-6);
  const double v2 = f(1e-7);
  const double v3 = f(1e-8);
  const double d1 = v1 - v2;
  const double d2 = v2 - v3;
  double limit = v3;
  if (std::abs(d2) > 1e-15 && std::abs(d1) > 1.05 * std::abs(d2)) {
    const double ratio = d1 / d2;
    const double extrapolated = v3 - d2 / (ratio - 1.0);
    // Richardson check: accept only a contraction-consistent estimate.
    if (std::abs(extrapolated - v3) <= std::abs(d2)) limit = extrapolated;
  }
  return std::max(limit, 0.0);
}

}  // namespace qsi
