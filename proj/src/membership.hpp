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

#include <cstdint>

#include "fisher.hpp"

namespace qsi {

struct MembershipConfig {
  int loewner_sets = 200;   // random point sets for the divided-difference test
  int max_points = 6;       // points per set, drawn in [2, max_points]
  int matrix_pairs = 40;    // random ordered matrix pairs 0 < A <= B
  int matrix_dim = 4;
  int grid_points = 25;     // functional-equation grid on [1e-4, 1e4]
  double tol = 1e-9;
  std::uint64_t seed = 42;
};

/// Sampled necessary conditions for membership in the representing-function
/// class: normalization f(1) = 1, the symmetry f(t) = t f(1/t), positive
/// semidefiniteness of divided-difference (Loewner) matrices over random
/// point sets, and monotonicity on random ordered Hermitian pairs. A clean
/// report means "consistent with operator monotone"; it is not a proof.
struct MembershipReport {
  double normalization_residual = 0.0;
  double functional_equation_residual = 0.0;
  double loewner_min_eigenvalue = 0.0;
  double matrix_pair_min_eigenvalue = 0.0;
  double tolerance_used = 0.0;

  bool normalization_ok = false;
  bool functional_equation_ok = false;
  bool loewner_ok = false;
  bool matrix_pair_ok = false;

  bool consistent() const {
    return normalization_ok && functional_equation_ok && loewner_ok && matrix_pair_ok;
  }
};

MembershipReport verify_fop_membership(const FisherFunction& f,
                                       const MembershipConfig& config = MembershipConfig{});

}  // namespace qsi
