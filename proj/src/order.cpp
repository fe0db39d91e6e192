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

#include "order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "extract.hpp"
#include "grids.hpp"

namespace qsi {

double phi(const FisherFunction& f, const FisherFunction& g, double t) {
  if (!(t > 0.0)) raise(ErrorCode::domain_error, "phi requires t > 0");
  return 0.5 * (t + 1.0) * f(t) / g(t);
}

WeightFunction weight_of(const FisherFunction& f) {
  if (f.has_weight()) return f.weight();
  if (f.kind() == FisherKind::wyd || f.has_continuation()) {
    const std::vector<double> knots = uniform_lambda_grid(257);
    std::vector<double> values(knots.size());
    for (size_t i = 0; i < knots.size(); ++i) values[i] = extract_weight(f, knots[i]);
    return WeightFunction::grid(knots, values, "extracted(" + f.spec() + ")");
  }
  raise(ErrorCode::weight_unavailable, "no weight source for " + f.spec());
}

namespace {

bool weights_available(const FisherFunction& f) {
  return f.has_weight() || f.has_continuation() || f.kind() == FisherKind::wyd;
}

OrderVerdict preceq_by_weights(const FisherFunction& f, const FisherFunction& g,
                               const OrderConfig& config) {
  const WeightFunction hf = weight_of(f);
  const WeightFunction hg = weight_of(g);
  const std::vector<double>& grid = order_lambda_grid();
  double worst = std::numeric_limits<double>::infinity();
  for (double lambda : grid) worst = std::min(worst, hf(lambda) - hg(lambda));
  OrderVerdict verdict;
  verdict.method = OrderMethod::weight_comparison;
  verdict.worst_margin = worst;
  verdict.grid_size = static_cast<int>(grid.size());
  verdict.holds = worst >= -config.weight_tol;
  return verdict;
}

OrderVerdict preceq_by_phi(const FisherFunction& f, const FisherFunction& g,
                           const OrderConfig& config) {
  const double accuracy = 4.0 * (f.eval_accuracy() + g.eval_accuracy());
  const FisherFunction quotient = FisherFunction::custom(
      "phi(" + f.spec() + "," + g.spec() + ")",
      [f, g](double t) { return phi(f, g, t); }, std::nullopt, std::nullopt, accuracy);
  const MembershipReport report = verify_fop_membership(quotient, config.membership);
  OrderVerdict verdict;
  verdict.method = OrderMethod::phi_monotonicity;
  verdict.worst_margin =
      std::min(report.loewner_min_eigenvalue, report.matrix_pair_min_eigenvalue);
  verdict.grid_size = config.membership.loewner_sets;
  verdict.holds = report.consistent();
  return verdict;
}

}  // namespace

OrderVerdict preceq(const FisherFunction& f, const FisherFunction& g, const OrderConfig& config) {
  switch (config.method) {
    case OrderMethod::weight_comparison:
      return preceq_by_weights(f, g, config);
    case OrderMethod::phi_monotonicity:
      return preceq_by_phi(f, g, config);
    case OrderMethod::automatic:
      if (weights_available(f) && weights_available(g)) return preceq_by_weights(f, g, config);
      return preceq_by_phi(f, g, config);
    case OrderMethod::both: {
      const OrderVerdict by_weights = preceq_by_weights(f, g, config);
      const OrderVerdict by_phi = preceq_by_phi(f, g, config);
      if (by_weights.holds != by_phi.holds)
        raise(ErrorCode::method_disagreement,
              "weight comparison and phi monotonicity disagree for " + f.spec() + " vs " +
                  g.spec() + "; tolerances need attention");
      OrderVerdict verdict = by_weights;
      verdict.method = OrderMethod::both;
      verdict.worst_margin = std::min(by_weights.worst_margin, by_phi.worst_margin);
      return verdict;
    }
  }
  raise(ErrorCode::internal_error, "unreachable order method");
}

FisherFunction meet(const FisherFunction& f, const FisherFunction& g) {
  const WeightFunction combined = WeightFunction::pointwise_max(weight_of(f), weight_of(g));
  return FisherFunction::from_weight("meet(" + f.spec() + "," + g.spec() + ")", combined);
}

FisherFunction join(const FisherFunction& f, const FisherFunction& g) {
  const WeightFunction combined = WeightFunction::pointwise_min(weight_of(f), weight_of(g));
  return FisherFunction::from_weight("join(" + f.spec() + "," + g.spec() + ")", combined);
}

FisherFunction sharp(const FisherFunction& f) {
  std::optional<WeightFunction> weight;
  if (f.has_weight()) weight = WeightFunction::complement(f.weight());
  std::optional<double> f_zero;
  if (f.regular()) f_zero = 0.0;  // t/f(t) -> 0/f(0)
  return FisherFunction::custom(
      "sharp(" + f.spec() + ")", [f](double t) { return t / f(t); }, f_zero, weight,
      f.eval_accuracy());
}

}  // namespace qsi
