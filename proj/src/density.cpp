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

#include "density.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qsi {

DensityMatrix validate_density(const ComplexMatrix& m, const ValidationTolerances& tol) {
  HermitianMatrix h = HermitianMatrix::require(m, tol.hermiticity);

  const double trace_dev = std::abs(h.matrix().trace() - complexd(1.0, 0.0));
  if (!(trace_dev < tol.trace))
    raise(ErrorCode::trace_not_one,
          "trace deviates from one by " + std::to_string(trace_dev));

  SpectralDecomposition spec = spectral_decompose(h);
  if (!(spec.eigenvalues.front() > tol.positivity))
    raise(ErrorCode::not_positive_definite,
          "smallest eigenvalue " + std::to_string(spec.eigenvalues.front()) +
              " is not strictly positive");

  return DensityMatrix(std::move(h), std::move(spec));
}

DensityMatrix smooth_density(const ComplexMatrix& m, double eps, const ValidationTolerances& tol) {
  if (!(eps > 0.0 && eps < 1.0))
    raise(ErrorCode::invalid_argument, "smoothing parameter must lie in (0,1)");
  const int n = m.dim();
  ComplexMatrix mixed = m * complexd(1.0 - eps, 0.0) +
                        ComplexMatrix::identity(n) * complexd(eps / n, 0.0);
  return validate_density(mixed, tol);
}

const std::vector<double>& epsilon_ladder() {
  static const std::vector<double> ladder = {1e-3, 1e-5, 1e-7};
  return ladder;
}

HermitianMatrix matrix_power(const DensityMatrix& rho, double p) {
  if (!(p > 0.0)) raise(ErrorCode::domain_error, "matrix power requires p > 0");
  return HermitianMatrix::trusted(
      rho.spectrum().apply([p](double x) { return std::pow(x, p); }));
}

ComplexMatrix apply_bivariate(const std::function<double(double, double)>& k,
                              const DensityMatrix& rho, const ComplexMatrix& x) {
  require_same_dim(rho.matrix(), x, "apply_bivariate");
  const ComplexMatrix& u = rho.spectrum().eigenvectors;
  const std::vector<double>& lam = rho.eigenvalues();
  const int n = x.dim();

  ComplexMatrix xprime = u.adjoint() * x * u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      xprime(i, j) *= k(lam[static_cast<size_t>(i)], lam[static_cast<size_t>(j)]);
  return u * xprime * u.adjoint();
}

}  // namespace qsi
