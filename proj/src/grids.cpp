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

#include "grids.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace qsi {

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) raise(ErrorCode::invalid_argument, "grid needs at least one point");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<size_t>(n));
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = a + i * step;
  out.back() = b;
  return out;
}

std::vector<double> logspace(double a, double b, int n) {
  if (!(a > 0.0 && b > 0.0)) raise(ErrorCode::invalid_argument, "log grid needs positive bounds");
  std::vector<double> out = linspace(std::log(a), std::log(b), n);
  for (double& x : out) x = std::exp(x);
  if (n >= 1) {
    out.front() = a;
    out.back() = b;
  }
  return out;
}

const std::vector<double>& standard_t_grid() {
  static const std::vector<double> grid = logspace(0.01, 100.0, 40);
  return grid;
}

std::vector<double> uniform_lambda_grid(int n) {
  if (n < 1) raise(ErrorCode::invalid_argument, "grid needs at least one point");
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i - 1)] = static_cast<double>(i) / (n + 1);
  return out;
}

const std::vector<double>& order_lambda_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> pts = uniform_lambda_grid(256);
    for (int k = 1; k <= 256; ++k)
      pts.push_back(0.5 * (1.0 - std::cos(M_PI * k / 257.0)));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }();
  return grid;
}

const std::vector<double>& default_p_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g = linspace(0.02, 0.98, 33);
    g[16] = 0.5;
    return g;
  }();
  return grid;
}

}  // namespace qsi
