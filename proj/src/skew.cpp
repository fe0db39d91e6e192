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

#include "skew.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qsi {

double real_checked(complexd z, const char* what) {
  if (std::abs(z.imag()) > 1e-11 * (1.0 + std::abs(z.real())))
    raise(ErrorCode::numerical_inconsistency,
          std::string(what) + ": imaginary residue " + std::to_string(z.imag()) +
              " exceeds the real-result policy");
  return z.real();
}

double variance(const DensityMatrix& rho, const ComplexMatrix& a) {
  require_same_dim(rho.matrix(), a, "variance");
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix adj = a.adjoint();
  const complexd symmetrized =
      0.5 * (trace_product(r, adj * a) + trace_product(r, a * adj));
  const complexd mean = trace_product(r, a);
  return real_checked(symmetrized, "variance") - std::norm(mean);
}

complexd covariance(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(rho.matrix(), a, "covariance");
  require_same_dim(rho.matrix(), b, "covariance");
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix adj = a.adjoint();
  const complexd symmetrized =
      0.5 * (trace_product(r, adj * b) + trace_product(r, b * adj));
  return symmetrized - trace_product(r, adj) * trace_product(r, b);
}

complexd skew_bilinear(const FisherFunction& f, const DensityMatrix& rho, const ComplexMatrix& a,
                       const ComplexMatrix& b) {
  if (!f.regular())
    raise(ErrorCode::not_regular, "skew information requires a regular function, got " + f.spec());
  require_same_dim(rho.matrix(), a, "skew_bilinear");
  require_same_dim(rho.matrix(), b, "skew_bilinear");

  const complexd i_unit(0.0, 1.0);
  const ComplexMatrix left = commutator(rho.matrix(), a.adjoint()) * i_unit;
  const ComplexMatrix right = commutator(rho.matrix(), b) * i_unit;
  const auto kernel = [&f](double x, double y) { return f.check_c(x, y); };
  return 0.5 * trace_product(left, apply_bivariate(kernel, rho, right));
}

double skew_info(const FisherFunction& f, const DensityMatrix& rho, const ComplexMatrix& a) {
  return real_checked(skew_bilinear(f, rho, a, a), "skew_info");
}

double skew_info_alt(const FisherFunction& f, const DensityMatrix& rho, const HermitianMatrix& a) {
  if (!f.regular())
    raise(ErrorCode::not_regular, "skew information requires a regular function, got " + f.spec());
  require_same_dim(rho.matrix(), a.matrix(), "skew_info_alt");

  const ComplexMatrix& am = a.matrix();
  const double second_moment = real_checked(trace_product(rho.matrix(), am * am), "tr rho A^2");
  const auto kernel = [&f](double x, double y) { return y * f.tilde_f(x / y); };
  const double smoothed =
      real_checked(trace_product(am, apply_bivariate(kernel, rho, am)), "tr A k(L,R) A");
  return second_moment - smoothed;
}

double wyd_direct(double p, const DensityMatrix& rho, const HermitianMatrix& a) {
  if (!(p > 0.0 && p < 1.0)) raise(ErrorCode::domain_error, "wyd_direct requires p in (0,1)");
  require_same_dim(rho.matrix(), a.matrix(), "wyd_direct");
  const ComplexMatrix cp = commutator(matrix_power(rho, p).matrix(), a.matrix());
  const ComplexMatrix cq = commutator(matrix_power(rho, 1.0 - p).matrix(), a.matrix());
  return -0.5 * real_checked(trace_product(cp, cq), "wyd_direct");
}

GramPair gram_pair(const FisherFunction& f, const DensityMatrix& rho,
                   const std::vector<ComplexMatrix>& tuple) {
  if (tuple.empty()) raise(ErrorCode::invalid_argument, "observable tuple is empty");
  const int k = static_cast<int>(tuple.size());
  ComplexMatrix skew(k), cov(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      skew(i, j) = skew_bilinear(f, rho, tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(j)]);
      cov(i, j) = covariance(rho, tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(j)]);
    }
  }
  const double scale = 1.0 + std::max(skew.max_abs(), cov.max_abs());
  if (skew.hermiticity_deviation() > 1e-11 * scale || cov.hermiticity_deviation() > 1e-11 * scale)
    raise(ErrorCode::numerical_inconsistency, "Gram matrices drifted from Hermitian");
  return GramPair{hermitize(skew), hermitize(cov)};
}

double hermitian_determinant(const HermitianMatrix& m) {
  double det = 1.0;
  for (double ev : spectral_decompose(m).eigenvalues) det *= ev;
  return det;
}

}  // namespace qsi
