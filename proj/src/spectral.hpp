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

namespace qsi {

/// Validated Hermitian view of a ComplexMatrix. Construction symmetrizes
/// (M + M*)/2 once the deviation is below tolerance.
class HermitianMatrix {
 public:
  static HermitianMatrix require(const ComplexMatrix& m, double tol = 1e-10);

  // For internally produced matrices that are Hermitian by construction.
  static HermitianMatrix trusted(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return m_.dim(); }

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column j pairs with eigenvalues[j]

  ComplexMatrix reconstruct() const;

  // U f(diag) U*.
  ComplexMatrix apply(const std::function<double(double)>& fn) const;
};

/// Cyclic Jacobi diagonalization for complex Hermitian matrices. Stops when
/// the off-diagonal Frobenius norm drops below 1e-14 times the matrix norm.
SpectralDecomposition spectral_decompose(const HermitianMatrix& h);

double psd_min_eigenvalue(const HermitianMatrix& h);

}  // namespace qsi
