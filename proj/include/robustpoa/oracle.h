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

// Brute-force checks that do not go through the linear programs: exhaustive
// sweeps over tiny games, the extremal valuation adversary, and a game with
// no pure equilibrium.

#ifndef ROBUSTPOA_ORACLE_H_
#define ROBUSTPOA_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "robustpoa/game.h"
#include "robustpoa/uncertainty.h"

namespace robustpoa {

// A game before valuations are assigned.
struct GameSkeleton {
  std::vector<double> true_values;
  std::vector<std::vector<ResourceSet>> action_sets;
  BasisPair basis;
};

// Assigns y_{i,r} = (1 + delta) y_r on a_ne_i \ a_opt_i, (1 - delta) y_r on
// a_opt_i \ a_ne_i, and y_r everywhere else.
GameInstance extremal_valuations(const GameSkeleton& skeleton,
                                 const Allocation& a_ne,
                                 const Allocation& a_opt,
                                 UncertaintyLevel delta);

inline constexpr int kMaxSweepPlayers = 3;
inline constexpr int kMaxSweepResources = 4;

struct SweepOptions {
  // Upper bound on the number of games the sweep may construct.
  std::uint64_t budget = 50'000'000;
  // Instead of the extremal assignment, try every valuation in
  // {(1 - delta) y, y, (1 + delta) y} independently per player and resource.
  bool full_interval = false;
  double tol = kEquilibriumTolerance;
  // Called with every kept game and its instance PoA, in enumeration order.
  std::function<void(const GameInstance&, double)> observer;
};

struct SweepResult {
  double worst_poa = 1.0;
  std::optional<GameInstance> witness;
  std::uint64_t games_built = 0;
  std::uint64_t games_kept = 0;  // games where a_ne is an equilibrium
};

// Enumerates every game with `n` players, `m` resources whose true values
// range over `value_grid`, and two actions per player: an ordered pair
// (a_ne_i, a_opt_i) of arbitrary resource subsets. Valuations come from
// extremal_valuations (or the full interval grid). Games in which a_ne is
// an equilibrium are kept; the result is the smallest instance PoA among
// them. Among equal minima the witness with the lexicographically smallest
// serialization wins.
//
// Requires n == basis.n(), 1 <= n <= 3, 1 <= m <= 4 and a nonempty grid of
// positive values. Throws BudgetExceeded when the game count exceeds
// options.budget.
SweepResult brute_force_class_poa(int n, int m, const BasisPair& basis,
                                  UncertaintyLevel delta,
                                  const std::vector<double>& value_grid,
                                  const SweepOptions& options = {});

// "config,worst_poa,class_poa,gap"
std::string sweep_csv_header();
std::string sweep_csv_row(const std::string& config, double worst_poa,
                          double class_poa);

// Two players, four unit resources, u = (0, 1, 0), set covering welfare.
// Requires 0 < d < 1.
GameInstance no_pne_example(double d);

struct BestResponsePath {
  std::vector<Allocation> states;  // states[0] is the start
  bool reached_equilibrium = false;
  // Index into `states` of the state the walk returned to.
  std::optional<std::size_t> cycle_start;

  std::size_t cycle_length() const {
    return cycle_start ? states.size() - *cycle_start : 0;
  }
};

// Walks best responses: at each step the lowest-index player with a strict
// improvement (beyond tol) switches to its best response. Stops at an
// equilibrium, at the first revisited state, or after max_steps moves.
BestResponsePath best_response_path(const GameInstance& game,
                                    const Allocation& start,
                                    std::size_t max_steps,
                                    double tol = kEquilibriumTolerance);

}  // namespace robustpoa

#endif  // ROBUSTPOA_ORACLE_H_
