// Copyright 2026 The robustpoa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustpoa/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "robustpoa/errors.h"
#include "robustpoa/uncertainty.h"

namespace robustpoa {

UncertaintyLevel::UncertaintyLevel(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw ValidationError("uncertainty level must satisfy 0 <= delta < 1, got " +
                          std::to_string(delta));
  }
}

BasisPair::BasisPair(std::vector<double> w, std::vector<double> u)
    : w_(std::move(w)), u_(std::move(u)) {
  if (w_.size() != u_.size()) {
    throw ValidationError("basis: w and u must have the same length (n+1)");
  }
  if (w_.size() < 2) {
    throw ValidationError("basis: player count n must be at least 1");
  }
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (!std::isfinite(w_[k]) || !std::isfinite(u_[k])) {
      throw ValidationError("basis: entries must be finite");
    }
  }
  if (w_[0] != 0.0 || u_[0] != 0.0) {
    throw ValidationError("basis: w[0] = 0 and u[0] = 0 required");
  }
  if (w_[1] <= 0.0) {
    throw ValidationError("basis: w[1] > 0 required for normalization");
  }
  if (u_[1] <= 0.0) {
    throw ValidationError("basis: u[1] > 0 required for normalization");
  }
  const double ws = w_[1];
  const double us = u_[1];
  for (std::size_t k = 1; k < w_.size(); ++k) {
    w_[k] /= ws;
    u_[k] /= us;
    if (w_[k] <= 0.0) {
      throw ValidationError("basis: w[k] > 0 required for all 1 <= k <= n");
    }
  }
  w_[1] = 1.0;
  u_[1] = 1.0;
}

BasisPair BasisPair::SetCovering(std::vector<double> u) {
  std::vector<double> w(u.size(), 1.0);
  if (!w.empty()) w[0] = 0.0;
  return BasisPair(std::move(w), std::move(u));
}

Allocation Allocation::WithChoice(std::size_t i, int action) const {
  Allocation out = *this;
  out.choices_[i] = action;
  return out;
}

namespace {

void CheckPositiveVector(std::span<const double> values, std::size_t m,
                         const char* what) {
  if (values.size() != m) {
    throw ValidationError(std::string(what) +
                          ": expected one entry per resource");
  }
  for (double v : values) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw ValidationError(std::string(what) +
                            ": entries must be positive and finite");
    }
  }
}

}  // namespace

GameInstance::GameInstance(std::vector<double> true_values,
                           std::vector<std::vector<ResourceSet>> action_sets,
                           std::vector<std::vector<double>> valuations,
                           BasisPair basis)
    : true_values_(std::move(true_values)),
      action_sets_(std::move(action_sets)),
      valuations_(std::move(valuations)),
      basis_(std::move(basis)) {
  const std::size_t m = true_values_.size();
  if (action_sets_.empty()) {
    throw ValidationError("game: at least one player required");
  }
  if (basis_.n() != num_players()) {
    throw ValidationError("game: basis player count n must equal the number "
                          "of players");
  }
  if (valuations_.size() != action_sets_.size()) {
    throw ValidationError("game: one valuation vector per player required");
  }
  CheckPositiveVector(true_values_, m, "game: true values");
  for (const auto& v : valuations_) CheckPositiveVector(v, m, "game: valuations");
  for (auto& actions : action_sets_) {
    if (actions.empty()) {
      throw ValidationError("game: every action set must be nonempty");
    }
    for (auto& action : actions) {
      std::sort(action.begin(), action.end());
      if (std::adjacent_find(action.begin(), action.end()) != action.end()) {
        throw ValidationError("game: action lists a resource twice");
      }
      for (int r : action) {
        if (r < 0 || static_cast<std::size_t>(r) >= m) {
          throw ValidationError("game: action references resource index " +
                                std::to_string(r) + " out of range");
        }
      }
    }
  }
}

GameInstance GameInstance::WithBasis(BasisPair basis) const {
  return GameInstance(true_values_, action_sets_, valuations_, std::move(basis));
}

GameInstance GameInstance::WithValuations(
    std::vector<std::vector<double>> valuations) const {
  return GameInstance(true_values_, action_sets_, std::move(valuations), basis_);
}

std::optional<std::uint64_t> GameInstance::JointActionCount() const {
  std::uint64_t count = 1;
  for (const auto& actions : action_sets_) {
    const std::uint64_t k = actions.size();
    if (count > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::nullopt;
    }
    count *= k;
  }
  return count;
}

void GameInstance::CheckAllocation(const Allocation& alloc) const {
  if (alloc.size() != action_sets_.size()) {
    throw ValidationError("allocation: one choice per player required");
  }
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (alloc[i] < 0 ||
        static_cast<std::size_t>(alloc[i]) >= action_sets_[i].size()) {
      throw ValidationError("allocation: choice out of range for player " +
                            std::to_string(i));
    }
  }
}

namespace {

// Coverage counts without validation.
void FillCoverage(const GameInstance& game, const Allocation& alloc,
                  std::vector<int>& cov) {
  cov.assign(static_cast<std::size_t>(game.num_resources()), 0);
  for (int i = 0; i < game.num_players(); ++i) {
    for (int r : game.action(i, alloc[static_cast<std::size_t>(i)])) {
      ++cov[static_cast<std::size_t>(r)];
    }
  }
}

double WelfareFromCoverage(const GameInstance& game,
                           const std::vector<int>& cov) {
  const BasisPair& basis = game.basis();
  auto values = game.true_values();
  double total = 0.0;
  for (std::size_t r = 0; r < cov.size(); ++r) {
    if (cov[r] > 0) total += values[r] * basis.w(cov[r]);
  }
  return total;
}

// Utility of `player` if it plays `action` while the others stay at `alloc`.
// `cov` holds the coverage counts of `alloc`.
double DeviationUtility(const GameInstance& game, int player, int action,
                        const Allocation& alloc, const std::vector<int>& cov) {
  const BasisPair& basis = game.basis();
  const ResourceSet& current =
      game.action(player, alloc[static_cast<std::size_t>(player)]);
  auto y = game.valuations(player);
  double total = 0.0;
  for (int r : game.action(player, action)) {
    const bool already =
        std::binary_search(current.begin(), current.end(), r);
    const int k = cov[static_cast<std::size_t>(r)] + (already ? 0 : 1);
    total += y[static_cast<std::size_t>(r)] * basis.u(k);
  }
  return total;
}

bool IsEquilibriumWithCoverage(const GameInstance& game,
                               const Allocation& alloc,
                               const std::vector<int>& cov, double tol) {
  for (int i = 0; i < game.num_players(); ++i) {
    const int current = alloc[static_cast<std::size_t>(i)];
    const double base = DeviationUtility(game, i, current, alloc, cov);
    const int num_actions = static_cast<int>(game.action_set(i).size());
    for (int alt = 0; alt < num_actions; ++alt) {
      if (alt == current) continue;
      if (DeviationUtility(game, i, alt, alloc, cov) > base + tol) return false;
    }
  }
  return true;
}

std::uint64_t CheckedJointCount(const GameInstance& game,
                                std::uint64_t budget) {
  auto count = game.JointActionCount();
  if (!count || *count > budget) {
    throw BudgetExceeded("joint action space exceeds the enumeration budget of " +
                         std::to_string(budget) + " allocations");
  }
  return *count;
}

// Advances `choices` to the next joint allocation, last player fastest.
bool NextAllocation(const GameInstance& game, std::vector<int>& choices) {
  for (int i = game.num_players() - 1; i >= 0; --i) {
    auto idx = static_cast<std::size_t>(i);
    if (++choices[idx] < static_cast<int>(game.action_set(i).size())) {
      return true;
    }
    choices[idx] = 0;
  }
  return false;
}

}  // namespace

int coverage_count(const GameInstance& game, const Allocation& alloc, int r) {
  game.CheckAllocation(alloc);
  if (r < 0 || r >= game.num_resources()) {
    throw ValidationError("resource index out of range");
  }
  int count = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const ResourceSet& action = game.action(i, alloc[static_cast<std::size_t>(i)]);
    if (std::binary_search(action.begin(), action.end(), r)) ++count;
  }
  return count;
}

std::vector<int> coverage_counts(const GameInstance& game,
                                 const Allocation& alloc) {
  game.CheckAllocation(alloc);
  std::vector<int> cov;
  FillCoverage(game, alloc, cov);
  return cov;
}

double welfare(const GameInstance& game, const Allocation& alloc) {
  return WelfareFromCoverage(game, coverage_counts(game, alloc));
}

double utility(const GameInstance& game, int player, const Allocation& alloc) {
  if (player < 0 || player >= game.num_players()) {
    throw ValidationError("player index out of range");
  }
  const std::vector<int> cov = coverage_counts(game, alloc);
  const BasisPair& basis = game.basis();
  auto y = game.valuations(player);
  double total = 0.0;
  for (int r : game.action(player, alloc[static_cast<std::size_t>(player)])) {
    total += y[static_cast<std::size_t>(r)] *
             basis.u(cov[static_cast<std::size_t>(r)]);
  }
  return total;
}

double uncertainty_of(const GameInstance& game) {
  auto truth = game.true_values();
  double worst = 0.0;
  for (const auto& y : game.all_valuations()) {
    for (std::size_t r = 0; r < truth.size(); ++r) {
      worst = std::max(worst, std::abs(y[r] - truth[r]) / truth[r]);
    }
  }
  return worst;
}

bool is_equilibrium(const GameInstance& game, const Allocation& alloc,
                    double tol) {
  const std::vector<int> cov = coverage_counts(game, alloc);
  return IsEquilibriumWithCoverage(game, alloc, cov, tol);
}

BestResponse best_response(const GameInstance& game, int player,
                           const Allocation& alloc) {
  if (player < 0 || player >= game.num_players()) {
    throw ValidationError("player index out of range");
  }
  const std::vector<int> cov = coverage_counts(game, alloc);
  BestResponse best{0, -std::numeric_limits<double>::infinity()};
  const int num_actions = static_cast<int>(game.action_set(player).size());
  for (int a = 0; a < num_actions; ++a) {
    const double value = DeviationUtility(game, player, a, alloc, cov);
    if (value > best.utility) best = {a, value};
  }
  return best;
}

std::vector<Allocation> enumerate_equilibria(const GameInstance& game,
                                             std::uint64_t budget, double tol) {
  CheckedJointCount(game, budget);
  std::vector<Allocation> out;
  std::vector<int> choices(static_cast<std::size_t>(game.num_players()), 0);
  std::vector<int> cov;
  do {
    Allocation alloc(choices);
    FillCoverage(game, alloc, cov);
    if (IsEquilibriumWithCoverage(game, alloc, cov, tol)) {
      out.push_back(std::move(alloc));
    }
  } while (NextAllocation(game, choices));
  return out;
}

InstanceAnalysis analyze_instance(const GameInstance& game,
                                  std::uint64_t budget, double tol) {
  CheckedJointCount(game, budget);
  InstanceAnalysis result;
  bool have_optimum = false;
  std::vector<int> choices(static_cast<std::size_t>(game.num_players()), 0);
  std::vector<int> cov;
  do {
    Allocation alloc(choices);
    FillCoverage(game, alloc, cov);
    const double w = WelfareFromCoverage(game, cov);
    if (!have_optimum || w > result.optimal_welfare) {
      result.optimal_welfare = w;
      result.optimum = alloc;
      have_optimum = true;
    }
    if (IsEquilibriumWithCoverage(game, alloc, cov, tol)) {
      if (!result.worst_equilibrium || w < result.worst_equilibrium_welfare) {
        result.worst_equilibrium = alloc;
        result.worst_equilibrium_welfare = w;
      }
      result.equilibria.push_back(std::move(alloc));
    }
  } while (NextAllocation(game, choices));

  if (result.worst_equilibrium) {
    // An all-uncovered optimum has welfare 0; PoA is 1 by convention.
    result.poa = result.optimal_welfare > 0.0
                     ? result.worst_equilibrium_welfare / result.optimal_welfare
                     : 1.0;
  }
  return result;
}

std::optional<double> poa_of_instance(const GameInstance& game,
                                      std::uint64_t budget, double tol) {
  return analyze_instance(game, budget, tol).poa;
}

}  // namespace robustpoa
