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

#include "membership.hpp"

namespace qsi {

enum class OrderMethod {
  automatic,         // weight comparison when both weights exist, else phi
  weight_comparison, // h_f >= h_g on a dense lambda grid
  phi_monotonicity,  // membership test of phi = ((t+1)/2) f/g
  both,              // run both and require agreement
};

struct OrderVerdict {
  bool holds = false;
  OrderMethod method = OrderMethod::automatic;  // method that produced the verdict
  double worst_margin = 0.0;
  int grid_size = 0;
};

struct OrderConfig {
  OrderMethod method = OrderMethod::automatic;
  double weight_tol = 1e-9;  // slack for the almost-everywhere grid comparison
  MembershipConfig membership;
};

/// phi(t) = ((t+1)/2) f(t)/g(t); the order f <= g holds exactly when phi is
/// again a representing function.
double phi(const FisherFunction& f, const FisherFunction& g, double t);

/// Weight of f: the stored closed form when present, otherwise a tabulation
/// of extract_weight on a dense grid. weight_unavailable when neither works.
WeightFunction weight_of(const FisherFunction& f);

/// Decide f <= g. When both methods run and disagree, raises
/// method_disagreement: that signals a tolerance problem, not mathematics.
OrderVerdict preceq(const FisherFunction& f, const FisherFunction& g,
                    const OrderConfig& config = OrderConfig{});

/// Lattice meet: weight max(h_f, h_g), evaluated by reconstruction.
FisherFunction meet(const FisherFunction& f, const FisherFunction& g);

/// Lattice join: weight min(h_f, h_g).
FisherFunction join(const FisherFunction& f, const FisherFunction& g);

/// The involution t -> t/f(t); weight 1 - h when f's weight is known.
/// Regular functions map to non-regular ones.
FisherFunction sharp(const FisherFunction& f);

}  // namespace qsi
