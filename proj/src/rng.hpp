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
#include <random>

#include "complex_matrix.hpp"
#include "density.hpp"

namespace qsi {

/// Seeded generator with hand-rolled Box-Muller normals so that streams are
/// identical across standard libraries (std::normal_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal();

  complexd complex_normal() {
    const double re = normal();
    const double im = normal();
    return complexd(re, im);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 mix of (base, index); used to derive independent per-trial
/// seeds so any single trial can be replayed in isolation.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Square matrix of independent standard complex Gaussians.
ComplexMatrix random_ginibre(int dim, Rng& rng);

/// (G + G*)/2 for Ginibre G.
ComplexMatrix random_hermitian(int dim, Rng& rng);

/// G G* / tr(G G*); strictly positive definite with probability one.
DensityMatrix random_density(int dim, Rng& rng);

/// Rank-one projector |psi><psi| for a Gaussian random unit vector.
ComplexMatrix random_pure_projector(int dim, Rng& rng);

}  // namespace qsi
