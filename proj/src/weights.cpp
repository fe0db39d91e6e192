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

#include "weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace qsi {

namespace {

void require_open_unit(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    raise(ErrorCode::domain_error, "lambda must lie in (0,1)");
}

std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

double wyd_weight(double p, double lambda) {
  if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::domain_error, "wyd weight requires p in (0,1)");
  require_open_unit(lambda);
  const double sp = std::sin(p * M_PI);
  const double cp = std::cos(p * M_PI);
  const double lp = std::pow(lambda, p);
  const double lq = std::pow(lambda, 1.0 - p);
  const double num = (lp + lq) * sp;
  const double den = 1.0 - lambda - (lp - lq) * cp;
  // num >= 0, so atan2 lands in [0, pi] and h in [0, 1].
  return std::atan2(num, den) / M_PI;
}

double bridge_weight(double p, double lambda) {
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::domain_error, "bridge weight requires p in [0,1]");
  require_open_unit(lambda);
  return lambda < 1.0 - p ? 0.0 : p;
}

double weight_kernel(double lambda, double t) {
  require_open_unit(lambda);
  if (!(t > 0.0)) raise(ErrorCode::domain_error, "kernel requires t > 0");
  const double one_minus_t = 1.0 - t;
  return (lambda * lambda - 1.0) * one_minus_t * one_minus_t /
         ((lambda + t) * (1.0 + lambda * t) * (1.0 + lambda) * (1.0 + lambda));
}

struct WeightFunction::Node {
  enum class Kind { constant, wyd, step, grid, maximum, minimum, complement };

  Kind kind;
  double param = 0.0;
  std::vector<double> knots;
  std::vector<double> values;
  std::shared_ptr<const Node> left, right;
  std::string spec;
  std::vector<double> breaks;

  double eval(double lambda) const {
    switch (kind) {
      case Kind::constant:
        return param;
      case Kind::wyd:
        return wyd_weight(param, lambda);
      case Kind::step:
        return lambda < 1.0 - param ? 0.0 : param;
      case Kind::grid: {
        if (lambda <= knots.front()) return values.front();
        if (lambda >= knots.back()) return values.back();
        const auto it = std::upper_bound(knots.begin(), knots.end(), lambda);
        const size_t j = static_cast<size_t>(it - knots.begin());
        const double x0 = knots[j - 1], x1 = knots[j];
        const double w = (lambda - x0) / (x1 - x0);
        return std::clamp(values[j - 1] + w * (values[j] - values[j - 1]), 0.0, 1.0);
      }
      case Kind::maximum:
        return std::max(left->eval(lambda), right->eval(lambda));
      case Kind::minimum:
        return std::min(left->eval(lambda), right->eval(lambda));
      case Kind::complement:
        return 1.0 - left->eval(lambda);
    }
    return 0.0;
  }
};

WeightFunction WeightFunction::constant(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    raise(ErrorCode::domain_error, "constant weight must lie in [0,1]");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::constant;
  node->param = value;
  node->spec = "const:" + format_param(value);
  return WeightFunction(node);
}

WeightFunction WeightFunction::wyd(double p) {
  if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::domain_error, "wyd weight requires p in (0,1)");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::wyd;
  node->param = p;
  node->spec = "wydh:" + format_param(p);
  return WeightFunction(node);
}

WeightFunction WeightFunction::step(double p) {
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::domain_error, "step weight requires p in [0,1]");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::step;
  node->param = p;
  node->spec = "steph:" + format_param(p);
  if (p > 0.0 && p < 1.0) node->breaks.push_back(1.0 - p);
  return WeightFunction(node);
}

WeightFunction WeightFunction::grid(std::vector<double> knots, std::vector<double> values,
                                    std::string label) {
  if (knots.empty() || knots.size() != values.size())
    raise(ErrorCode::invalid_argument, "grid weight needs matching, non-empty knots and values");
  std::vector<size_t> order(knots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return knots[a] < knots[b]; });
  std::vector<double> k(knots.size()), v(values.size());
  for (size_t i = 0; i < order.size(); ++i) {
    k[i] = knots[order[i]];
    v[i] = std::clamp(values[order[i]], 0.0, 1.0);
    if (!(k[i] > 0.0 && k[i] < 1.0))
      raise(ErrorCode::invalid_argument, "grid weight knots must lie in (0,1)");
    if (i > 0 && !(k[i] > k[i - 1]))
      raise(ErrorCode::invalid_argument, "grid weight knots must be strictly increasing");
  }
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::grid;
  node->knots = std::move(k);
  node->values = std::move(v);
  node->spec = std::move(label);
  node->breaks = node->knots;
  return WeightFunction(node);
}

namespace {

std::vector<double> merge_breaks(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

WeightFunction WeightFunction::pointwise_max(const WeightFunction& a, const WeightFunction& b) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::maximum;
  node->left = a.node_;
  node->right = b.node_;
  node->spec = "max(" + a.spec() + "," + b.spec() + ")";
  node->breaks = merge_breaks(a.node_->breaks, b.node_->breaks);
  return WeightFunction(node);
}

WeightFunction WeightFunction::pointwise_min(const WeightFunction& a, const WeightFunction& b) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::minimum;
  node->left = a.node_;
  node->right = b.node_;
  node->spec = "min(" + a.spec() + "," + b.spec() + ")";
  node->breaks = merge_breaks(a.node_->breaks, b.node_->breaks);
  return WeightFunction(node);
}

WeightFunction WeightFunction::complement(const WeightFunction& h) {
  if (h.node_->kind == Node::Kind::constant) return constant(1.0 - h.node_->param);
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::complement;
  node->left = h.node_;
  node->spec = "1-(" + h.spec() + ")";
  node->breaks = h.node_->breaks;
  return WeightFunction(node);
}

double WeightFunction::operator()(double lambda) const {
  require_open_unit(lambda);
  return node_->eval(lambda);
}

const std::vector<double>& WeightFunction::breakpoints() const { return node_->breaks; }

const std::string& WeightFunction::spec() const { return node_->spec; }

namespace {

// Effective substitution exponent for the lambda -> 0 endpoint. The weight's
// decay rate h ~ C lambda^alpha is probed numerically and the substitution
// lambda = u^e is boosted until the transformed integrand loses its cusp.
// With require_integrable set, alpha near zero (so h/lambda not integrable)
// is an error; otherwise it merely needs no boost.
double endpoint_exponent_for(const WeightFunction& h, const QuadratureConfig& config,
                             bool require_integrable) {
  const double fallback = std::max(1.0, config.endpoint_exponent);
  const double hi = h(1e-5);
  const double lo = h(1e-11);
  if (lo <= 1e-13) return fallback;  // vanishes at least as fast as we can use
  const double alpha = std::log(std::max(hi, 1e-300) / lo) / std::log(1e6);
  if (alpha < 0.02) {
    if (require_integrable)
      raise(ErrorCode::integrability_failure,
            "h(lambda)/lambda integral diverges numerically; the weight does not "
            "represent a regular function");
    return fallback;  // h(0+) > 0: no cusp to absorb
  }
  // The automatic boost is capped to keep lambda = u^e clear of underflow at
  // reachable depths; an explicit caller exponent is honored as given.
  const double boost = std::min(std::ceil(2.2 / alpha), 24.0);
  return std::max(fallback, boost);
}

std::vector<double> substituted_breakpoints(const WeightFunction& h, double e) {
  std::vector<double> breaks;
  for (double b : h.breakpoints()) breaks.push_back(std::pow(b, 1.0 / e));
  return breaks;
}

}  // namespace

double reconstruct_f(const WeightFunction& h, double t, const QuadratureConfig& config) {
  if (!(t > 0.0)) raise(ErrorCode::domain_error, "reconstruct_f requires t > 0");
  const double e = endpoint_exponent_for(h, config, false);

  // lambda = u^e; the Jacobian e u^{e-1} absorbs slow decay of h at zero.
  const auto integrand_u = [&h, t, e](double u) {
    const double lambda = std::pow(u, e);
    if (!(lambda > 0.0)) return 0.0;
    return weight_kernel(lambda, t) * h(lambda) * e * std::pow(u, e - 1.0);
  };
  const QuadratureResult r =
      integrate(integrand_u, 0.0, 1.0, substituted_breakpoints(h, e), config);
  return 0.5 * (1.0 + t) * std::exp(r.value);
}

double reconstruct_check_f(const WeightFunction& h, double t, const QuadratureConfig& config) {
  if (!(t > 0.0)) raise(ErrorCode::domain_error, "reconstruct_check_f requires t > 0");
  const double e = endpoint_exponent_for(h, config, true);

  // lambda = u^e; d lambda / lambda = e du / u, so the integrand stays finite
  // in u wherever h vanishes at a positive rate.
  const auto integrand_u = [&h, t, e](double u) {
    const double lambda = std::pow(u, e);
    if (!(lambda > 0.0)) return 0.0;  // underflow deep in the endpoint tail
    const double kernel = t * (lambda * lambda - 1.0) / ((lambda + t) * (1.0 + lambda * t));
    return kernel * e * h(lambda) / u;
  };

  const QuadratureResult r =
      integrate(integrand_u, 0.0, 1.0, substituted_breakpoints(h, e), config);
  return std::exp(r.value) / (1.0 + t);
}

double weight_f_zero(const WeightFunction& h, const QuadratureConfig& config) {
  constexpr double t = 1e-8;
  try {
    return reconstruct_f(h, t, config) * reconstruct_check_f(h, t, config);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::integrability_failure) return 0.0;
    throw;
  }
}

WeightFunction load_weight_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io_error, "cannot open weight file: " + path);
  std::string line;
  if (!std::getline(in, line)) raise(ErrorCode::parse_error, "empty weight file: " + path);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != "lambda,value")
    raise(ErrorCode::parse_error, "weight file must start with header 'lambda,value'");

  std::vector<double> knots, values;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      raise(ErrorCode::parse_error, "weight file row " + std::to_string(row) + " has no comma");
    try {
      knots.push_back(std::stod(line.substr(0, comma)));
      values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      raise(ErrorCode::parse_error, "weight file row " + std::to_string(row) + " is not numeric");
    }
  }
  if (knots.empty()) raise(ErrorCode::parse_error, "weight file has no data rows");
  return WeightFunction::grid(std::move(knots), std::move(values), "grid:" + path);
}

WeightFunction parse_weight_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  const auto parse_p = [&spec, &tail]() {
    try {
      size_t used = 0;
      const double p = std::stod(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("trailing garbage");
      return p;
    } catch (const std::exception&) {
      raise(ErrorCode::parse_error, "cannot parse parameter in weight spec '" + spec + "'");
    }
  };

  if (head == "const") {
    const double v = parse_p();
    if (!(v >= 0.0 && v <= 1.0)) raise(ErrorCode::parse_error, "const weight value out of range");
    return WeightFunction::constant(v);
  }
  if (head == "wydh") {
    const double p = parse_p();
    if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::parse_error, "p out of range for wydh weight");
    return WeightFunction::wyd(p);
  }
  if (head == "steph") {
    const double p = parse_p();
    if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::parse_error, "p out of range for steph weight");
    return WeightFunction::step(p);
  }
  if (head == "grid") {
    if (tail.empty()) raise(ErrorCode::parse_error, "grid weight spec needs a file path");
    return load_weight_csv(tail);
  }
  raise(ErrorCode::parse_error, "unknown weight spec '" + spec + "'");
}

}  // namespace qsi
