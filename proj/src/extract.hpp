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

#include "fisher.hpp"

namespace qsi {

struct ExtractionConfig {
  // Descending ladder of offsets above the cut; the last two rungs feed a
  // Richardson extrapolation to eps -> 0.
  std::vector<double> eps_ladder = {1e-4, 1e-5, 1e-6};
  int path_steps = 64;
};

/// Weight value h(lambda) recovered from boundary values of the analytic
/// continuation at z0 = -lambda + i eps. The wyd family uses its product
/// form -(1/pi) arg((1 - z0^p)(1 - z0^{1-p})); for the elementary functions
/// the argument of f itself is tracked continuously along a path from t = 1.
/// Functions without a continuation raise unsupported_continuation; a path
/// step whose phase jump is too large to unwrap raises
/// branch_tracking_failure. Extraction for functions beyond the closed-form
/// catalog is experimental and only validated against the closed forms.
double extract_weight(const FisherFunction& f, double lambda,
                      const ExtractionConfig& config = ExtractionConfig{});

}  // namespace qsi
