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

#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace qsi {

HermitianMatrix HermitianMatrix::require(const ComplexMatrix& m, double tol) {
  const double dev = m.hermiticity_deviation();
  if (!(dev < tol))
    raise(ErrorCode::not_hermitian,
          "hermiticity deviation " + std::to_string(dev) + " exceeds tolerance");
  return HermitianMatrix(hermitize(m));
}

HermitianMatrix HermitianMatrix::trusted(ComplexMatrix m) {
  return HermitianMatrix(std::move(m));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return apply([](double x) { return x; });
}

ComplexMatrix SpectralDecomposition::apply(const std::function<double(double)>& fn) const {
  const int n = eigenvectors.dim();
  ComplexMatrix scaled(n);
  for (int i = 0; i < n; ++i) {
    const complexd f = fn(eigenvalues[static_cast<size_t>(i)]);
    for (int r = 0; r < n; ++r) scaled(r, i) = eigenvectors(r, i) * f;
  }
  return scaled * eigenvectors.adjoint();
}

namespace {

double offdiagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation acting on the (p,q) plane. The 2x2 unitary is
// [[c, -conj(s)], [s, c]] with c real, chosen to annihilate A(p,q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const complexd z = a(p, q);
  const double zabs = std::abs(z);
  if (zabs == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * zabs, app - aqq);
  const double c = std::cos(theta);
  const complexd s = std::sin(theta) * std::conj(z) / zabs;
  const complexd sc = std::conj(s);

  const int n = a.dim();
  // Column update A <- A * J.
  for (int r = 0; r < n; ++r) {
    const complexd arp = a(r, p);
    const complexd arq = a(r, q);
    a(r, p) = c * arp + s * arq;
    a(r, q) = -sc * arp + c * arq;
  }
  // Row update A <- J* * A.
  for (int col = 0; col < n; ++col) {
    const complexd apc = a(p, col);
    const complexd aqc = a(q, col);
    a(p, col) = c * apc + sc * aqc;
    a(q, col) = -s * apc + c * aqc;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = complexd(a(p, p).real(), 0.0);
  a(q, q) = complexd(a(q, q).real(), 0.0);

  for (int r = 0; r < n; ++r) {
    const complexd vrp = v(r, p);
    const complexd vrq = v(r, q);
    v(r, p) = c * vrp + s * vrq;
    v(r, q) = -sc * vrp + c * vrq;
  }
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  if (n > 1) {
    const double scale = a.frobenius_norm();
    const double threshold = 1e-14 * (scale > 0.0 ? scale : 1.0);
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    while (offdiagonal_norm(a) > threshold) {
      if (++sweep > kMaxSweeps)
        raise(ErrorCode::convergence_failure, "Jacobi eigensolver did not converge");
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q)
          if (std::abs(a(p, q)) * n > 0.01 * threshold) rotate(a, v, p, q);
    }
  }

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[static_cast<size_t>(j)] = a(perm[static_cast<size_t>(j)], perm[static_cast<size_t>(j)]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, perm[static_cast<size_t>(j)]);
  }
  return out;
}

double psd_min_eigenvalue(const HermitianMatrix& h) {
  return spectral_decompose(h).eigenvalues.front();
}

}  // namespace qsi
