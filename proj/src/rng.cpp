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

#include "rng.hpp"

#include <cmath>

namespace qsi {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(int dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  return hermitize(random_ginibre(dim, rng));
}

DensityMatrix random_density(int dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix gram = g * g.adjoint();
  gram *= complexd(1.0 / gram.trace().real(), 0.0);
  return validate_density(gram);
}

ComplexMatrix random_pure_projector(int dim, Rng& rng) {
  std::vector<complexd> psi(static_cast<size_t>(dim));
  double norm2 = 0.0;
  for (auto& c : psi) {
    c = rng.complex_normal();
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / norm2;
  ComplexMatrix proj(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      proj(i, j) = psi[static_cast<size_t>(i)] * std::conj(psi[static_cast<size_t>(j)]) * inv;
  return proj;
}

}  // namespace qsi
