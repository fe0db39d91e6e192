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

#include <functional>
#include <vector>

#include "complex_matrix.hpp"
#include "spectral.hpp"

namespace qsi {

struct ValidationTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double positivity = 1e-12;
};

/// Positive definite, unit trace state with its spectral decomposition
/// cached at construction. Immutable.
class DensityMatrix {
 public:
  const HermitianMatrix& hermitian() const noexcept { return matrix_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_.matrix(); }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const std::vector<double>& eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  int dim() const noexcept { return matrix_.dim(); }

  friend DensityMatrix validate_density(const ComplexMatrix&, const ValidationTolerances&);

 private:
  DensityMatrix(HermitianMatrix m, SpectralDecomposition s)
      : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  HermitianMatrix matrix_;
  SpectralDecomposition spectrum_;
};

DensityMatrix validate_density(const ComplexMatrix& m,
                               const ValidationTolerances& tol = ValidationTolerances{});

/// (1-eps) * m + eps * I/dim, then validated. Intended for pure-state limits,
/// where the raw projector itself is singular and gets rejected.
DensityMatrix smooth_density(const ComplexMatrix& m, double eps,
                             const ValidationTolerances& tol = ValidationTolerances{});

/// Default smoothing ladder for pure-state limit studies.
const std::vector<double>& epsilon_ladder();

/// U diag(lambda_i^p) U* for p > 0.
HermitianMatrix matrix_power(const DensityMatrix& rho, double p);

/// k(L_rho, R_rho) applied to X: rotate X into the eigenbasis of rho, scale
/// entry (i,j) by k(lambda_i, lambda_j), rotate back.
ComplexMatrix apply_bivariate(const std::function<double(double, double)>& k,
                              const DensityMatrix& rho, const ComplexMatrix& x);

}  // namespace qsi
