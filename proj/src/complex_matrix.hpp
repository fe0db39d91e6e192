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

#include <complex>
#include <vector>

namespace qsi {

using complexd = std::complex<double>;

/// Dense square complex matrix, row-major, value semantics.
/// Dimensions stay at desk scale (<= 64), so no blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<complexd> entries);

  static ComplexMatrix identity(int dim);

  int dim() const noexcept { return dim_; }

  complexd& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const complexd& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * dim_ + j];
  }

  const std::vector<complexd>& entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  complexd trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_deviation() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(complexd scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, complexd scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend ComplexMatrix operator*(complexd scalar, ComplexMatrix rhs) {
    rhs *= scalar;
    return rhs;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  int dim_ = 0;
  std::vector<complexd> entries_;
};

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// (M + M*)/2.
ComplexMatrix hermitize(const ComplexMatrix& m);

/// tr(A B) without forming the product.
complexd trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context);

}  // namespace qsi
