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

#include <vector>

namespace qsi {

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);  // log-spaced, a,b > 0

/// Shared evaluation grid for function comparisons: 40 log-spaced points in
/// [0.01, 100].
const std::vector<double>& standard_t_grid();

/// n interior points i/(n+1) of (0,1).
std::vector<double> uniform_lambda_grid(int n);

/// 512-point grid on (0,1): uniform points plus Chebyshev points clustering
/// at both ends; used for almost-everywhere weight comparisons.
const std::vector<double>& order_lambda_grid();

/// 33 uniform points in [0.02, 0.98] with the midpoint pinned to 0.5 exactly.
const std::vector<double>& default_p_grid();

}  // namespace qsi
