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
#include <string>
#include <vector>

#include "skew.hpp"

namespace qsi {

struct Violation {
  std::uint64_t seed = 0;      // per-trial derived seed; replays the trial
  double margin = 0.0;         // normalized margin that went negative
  std::string inputs_digest;   // FNV-1a hash of the sampled inputs
};

struct InequalityReport {
  std::string suite;
  std::string function_spec;
  std::vector<int> dims;
  int trials = 0;
  std::uint64_t seed = 0;
  double worst_margin = 0.0;
  std::vector<Violation> violations;
  bool passed = true;

  std::string to_json() const;
};

struct SuiteConfig {
  std::vector<int> dims = {3};
  int tuple_size = 2;
  int trials = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

/// Single-instance checks. Each returns a one-trial report whose margins are
/// normalized by the natural scale of the instance; holds exactly when every
/// margin clears -tol.

/// 0 <= I <= Var for one (state, observable) pair.
InequalityReport verify_basic(const FisherFunction& f, const DensityMatrix& rho,
                              const ComplexMatrix& a, double tol);

/// Positivity of Cov-Gram minus Skew-Gram for one observable tuple.
InequalityReport verify_matrix_inequality(const FisherFunction& f, const DensityMatrix& rho,
                                          const std::vector<ComplexMatrix>& tuple, double tol);

/// 0 <= det Skew-Gram <= det Cov-Gram for one observable tuple.
InequalityReport verify_determinant(const FisherFunction& f, const DensityMatrix& rho,
                                    const std::vector<ComplexMatrix>& tuple, double tol);

/// Rise-then-fall of the direct-formula information over an ascending p grid
/// for one (state, observable) pair.
InequalityReport verify_p_monotonicity(const DensityMatrix& rho, const HermitianMatrix& a,
                                       const std::vector<double>& p_grid, double tol);

/// 0 <= I <= Var over seeded random states and observables (Hermitian and
/// general complex alternate trial by trial). Margins are normalized by
/// 1 + Var.
InequalityReport run_basic_suite(const FisherFunction& f, const SuiteConfig& config);

/// Positivity of the Gram difference Cov - Skew over random observable
/// tuples; margin is the smallest eigenvalue over 1 + tr Cov.
InequalityReport run_matrix_suite(const FisherFunction& f, const SuiteConfig& config);

/// 0 <= det Skew <= det Cov over the same tuple construction.
InequalityReport run_determinant_suite(const FisherFunction& f, const SuiteConfig& config);

/// The direct-formula information rises to p = 1/2 and falls after, checked
/// over the default p grid per random (state, observable) pair.
InequalityReport run_pmono_suite(const SuiteConfig& config);

/// Convexity of I and concavity of Var under state mixing.
InequalityReport run_convexity_suite(const FisherFunction& f, const SuiteConfig& config);

/// Dispatch by suite name: basic | matrix | det | pmono | convexity.
InequalityReport run_suite(const std::string& name, const FisherFunction& f,
                           const SuiteConfig& config);

std::string digest_inputs(const std::vector<const ComplexMatrix*>& inputs);

}  // namespace qsi
