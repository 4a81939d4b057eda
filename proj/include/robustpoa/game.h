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

// Explicit resource allocation games with per-agent valuations.
//
// A game has n agents and m resources. Resource r has a true value y_r > 0;
// agent i believes the value is y_{i,r} > 0. Every agent picks one action
// (a subset of resources) from its own action set. Welfare is evaluated at
// the true values through the welfare basis w, utilities at each agent's own
// valuations through the utility basis u:
//
//   W(a)   = sum_r y_r * w(|a|_r)
//   U_i(a) = sum_{r in a_i} y_{i,r} * u(|a|_r)
//
// where |a|_r is the number of agents whose chosen action contains r.

#ifndef ROBUSTPOA_GAME_H_
#define ROBUSTPOA_GAME_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace robustpoa {

// Welfare curve w and utility curve u over coverage counts 0..n.
//
// Both curves are stored normalized: w[0] = u[0] = 0 and w[1] = u[1] = 1.
// The constructor rescales w by w[1] and u by u[1]; a positive rescaling
// changes neither equilibria nor the price of anarchy.
class BasisPair {
 public:
  // `w` and `u` hold n+1 entries indexed 0..n. Throws ValidationError when
  // the lengths differ, n < 1, w[0] or u[0] is nonzero, w[1] <= 0, u[1] <= 0,
  // some w[k] <= 0 for k >= 1, or an entry is not finite.
  BasisPair(std::vector<double> w, std::vector<double> u);

  // Set covering welfare w(k) = 1 for k >= 1 with the given utility curve.
  static BasisPair SetCovering(std::vector<double> u);

  int n() const { return static_cast<int>(w_.size()) - 1; }

  double w(int k) const { return w_[static_cast<std::size_t>(k)]; }
  double u(int k) const { return u_[static_cast<std::size_t>(k)]; }

  // u extended with u(k) = 0 for k > n.
  double u_or_zero(int k) const { return k <= n() ? u(k) : 0.0; }

  std::span<const double> w_values() const { return w_; }
  std::span<const double> u_values() const { return u_; }

  friend bool operator==(const BasisPair&, const BasisPair&) = default;

 private:
  std::vector<double> w_;
  std::vector<double> u_;
};

// Sorted, duplicate-free list of resource indices.
using ResourceSet = std::vector<int>;

// One action index per player.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<int> choices) : choices_(std::move(choices)) {}

  std::span<const int> choices() const { return choices_; }
  int operator[](std::size_t i) const { return choices_[i]; }
  std::size_t size() const { return choices_.size(); }

  // Same allocation with player i switched to `action`.
  Allocation WithChoice(std::size_t i, int action) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<int> choices_;
};

// An explicit finite game. Immutable after construction.
class GameInstance {
 public:
  // Validates:
  //  * at least one player; basis.n() equals the number of players;
  //  * every player has a nonempty action set; every action is a set of
  //    valid, distinct resource indices (the empty set is allowed);
  //  * true_values and every valuation vector have one positive finite
  //    entry per resource.
  // Actions are stored sorted. Throws ValidationError.
  GameInstance(std::vector<double> true_values,
               std::vector<std::vector<ResourceSet>> action_sets,
               std::vector<std::vector<double>> valuations, BasisPair basis);

  int num_players() const { return static_cast<int>(action_sets_.size()); }
  int num_resources() const { return static_cast<int>(true_values_.size()); }

  const BasisPair& basis() const { return basis_; }
  std::span<const double> true_values() const { return true_values_; }
  std::span<const double> valuations(int player) const {
    return valuations_[static_cast<std::size_t>(player)];
  }
  const std::vector<std::vector<double>>& all_valuations() const {
    return valuations_;
  }
  const std::vector<ResourceSet>& action_set(int player) const {
    return action_sets_[static_cast<std::size_t>(player)];
  }
  const std::vector<std::vector<ResourceSet>>& action_sets() const {
    return action_sets_;
  }
  const ResourceSet& action(int player, int choice) const {
    return action_sets_[static_cast<std::size_t>(player)]
                       [static_cast<std::size_t>(choice)];
  }

  // Same game played under a different basis (same player count).
  GameInstance WithBasis(BasisPair basis) const;
  // Same game with replaced valuations.
  GameInstance WithValuations(std::vector<std::vector<double>> valuations) const;

  // Number of joint allocations, or nullopt on 64-bit overflow.
  std::optional<std::uint64_t> JointActionCount() const;

  // Throws ValidationError unless `alloc` has one in-range choice per player.
  void CheckAllocation(const Allocation& alloc) const;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  std::vector<double> true_values_;
  std::vector<std::vector<ResourceSet>> action_sets_;
  std::vector<std::vector<double>> valuations_;
  BasisPair basis_;
};

inline constexpr double kEquilibriumTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultJointBudget = 10'000'000;

// |a|_r: number of players whose chosen action contains resource r.
int coverage_count(const GameInstance& game, const Allocation& alloc, int r);

// Coverage counts of every resource.
std::vector<int> coverage_counts(const GameInstance& game,
                                 const Allocation& alloc);

// Welfare at the true values.
double welfare(const GameInstance& game, const Allocation& alloc);

// Utility of `player` at its own valuations.
double utility(const GameInstance& game, int player, const Allocation& alloc);

// max_{i,r} |y_{i,r} - y_r| / y_r.
double uncertainty_of(const GameInstance& game);

// Pure Nash equilibrium test with absolute tolerance `tol`: no player can
// raise its own-valuation utility by more than tol with a unilateral switch.
bool is_equilibrium(const GameInstance& game, const Allocation& alloc,
                    double tol = kEquilibriumTolerance);

// Best action of `player` against the others in `alloc` (the lowest index
// among ties) and its utility.
struct BestResponse {
  int action;
  double utility;
};
BestResponse best_response(const GameInstance& game, int player,
                           const Allocation& alloc);

// All pure equilibria in lexicographic order of choice vectors (the last
// player's choice varies fastest). Throws BudgetExceeded when the joint
// action space is larger than `budget`.
std::vector<Allocation> enumerate_equilibria(
    const GameInstance& game, std::uint64_t budget = kDefaultJointBudget,
    double tol = kEquilibriumTolerance);

// Everything one exhaustive pass over the joint action space yields.
struct InstanceAnalysis {
  std::vector<Allocation> equilibria;
  Allocation optimum;             // first welfare maximizer
  double optimal_welfare = 0.0;
  std::optional<Allocation> worst_equilibrium;  // first welfare minimizer
  double worst_equilibrium_welfare = 0.0;
  // min_NE W / max W; 1 when the optimum has zero welfare; nullopt when
  // there is no pure equilibrium.
  std::optional<double> poa;
};

InstanceAnalysis analyze_instance(const GameInstance& game,
                                  std::uint64_t budget = kDefaultJointBudget,
                                  double tol = kEquilibriumTolerance);

// Price of anarchy of a single game; nullopt when it has no pure equilibrium.
std::optional<double> poa_of_instance(
    const GameInstance& game, std::uint64_t budget = kDefaultJointBudget,
    double tol = kEquilibriumTolerance);

}  // namespace robustpoa

#endif  // ROBUSTPOA_GAME_H_
