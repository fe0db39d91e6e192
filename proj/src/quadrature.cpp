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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>

#include "errors.hpp"

namespace qsi {

namespace {

GaussLegendreRule compute_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<size_t>(order));
  rule.weights.resize(static_cast<size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n(z).
    double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.nodes[static_cast<size_t>(order - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(order - 1 - i)] = w;
  }
  return rule;
}

double panel_estimate(const std::function<double(double)>& f, double a, double b,
                      const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + halfwidth * rule.nodes[i]);
  return sum * halfwidth;
}

struct Panel {
  double a, b;
  double value;  // refined (two-half) estimate
  double error;  // |two-half - whole|
  int depth;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, int depth,
                 const GaussLegendreRule& rule) {
  const double whole = panel_estimate(f, a, b, rule);
  const double mid = 0.5 * (a + b);
  const double halves = panel_estimate(f, a, mid, rule) + panel_estimate(f, mid, b, rule);
  return Panel{a, b, halves, std::abs(halves - whole), depth};
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(int order) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& interior_breakpoints,
                           const QuadratureConfig& config) {
  if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0))
    raise(ErrorCode::invalid_argument, "quadrature tolerances must be positive");
  if (config.panel_order < 4)
    raise(ErrorCode::invalid_argument, "quadrature panel order must be >= 4");
  if (!(b > a)) raise(ErrorCode::invalid_argument, "quadrature interval is empty");

  const GaussLegendreRule& rule = gauss_legendre_rule(config.panel_order);

  std::vector<double> edges;
  edges.push_back(a);
  for (double x : interior_breakpoints)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  double total = 0.0;
  double total_error = 0.0;
  int panels = 0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = make_panel(f, edges[i], edges[i + 1], 0, rule);
    total += p.value;
    total_error += p.error;
    ++panels;
    queue.push(p);
  }

  constexpr int kMaxPanels = 20000;
  while (true) {
    const double target = std::max(config.abs_tol, config.rel_tol * std::abs(total));
    if (total_error <= target) break;
    if (queue.empty()) break;
    Panel worst = queue.top();
    if (worst.error <= 1e-17 * std::abs(total) + 1e-300) break;  // refinements exhausted
    if (worst.depth >= config.max_subdivisions)
      raise(ErrorCode::quadrature_failure,
            "tolerance not met within " + std::to_string(config.max_subdivisions) +
                " subdivisions");
    if (panels + 2 > kMaxPanels)
      raise(ErrorCode::quadrature_failure, "panel budget exhausted");
    queue.pop();
    total -= worst.value;
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const auto& half : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      Panel p = make_panel(f, half.first, half.second, worst.depth + 1, rule);
      total += p.value;
      total_error += p.error;
      queue.push(p);
    }
    ++panels;
  }

  if (!std::isfinite(total))
    raise(ErrorCode::quadrature_failure, "integral estimate is not finite");
  return QuadratureResult{total, total_error, panels};
}

}  // namespace qsi
