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

#include "complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "errors.hpp"

namespace qsi {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
  entries_.assign(static_cast<size_t>(dim) * dim, complexd(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<complexd> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
  if (entries_.size() != static_cast<size_t>(dim) * dim)
    raise(ErrorCode::invalid_argument, "entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

complexd ComplexMatrix::trace() const {
  complexd t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const complexd& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const complexd& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::hermiticity_deviation() const {
  double dev = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return dev;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd scalar) {
  for (complexd& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const complexd a = lhs(i, k);
      if (a == complexd(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

complexd trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_product");
  complexd t(0.0, 0.0);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t += a(i, j) * b(j, i);
  return t;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context) {
  if (a.dim() != b.dim())
    raise(ErrorCode::dimension_mismatch,
          std::string(context) + ": dimensions " + std::to_string(a.dim()) + " and " +
              std::to_string(b.dim()) + " differ");
}

}  // namespace qsi
