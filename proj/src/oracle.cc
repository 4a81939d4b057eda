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

#include "robustpoa/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "robustpoa/errors.h"
#include "robustpoa/json_io.h"

namespace robustpoa {

namespace {

bool Contains(const ResourceSet& set, int r) {
  return std::binary_search(set.begin(), set.end(), r);
}

ResourceSet SubsetFromMask(unsigned mask, int m) {
  ResourceSet out;
  for (int r = 0; r < m; ++r) {
    if (mask & (1u << r)) out.push_back(r);
  }
  return out;
}

// base^exp, or nullopt once the product exceeds `cap`.
std::optional<std::uint64_t> BoundedPow(std::uint64_t base, int exp,
                                        std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && out > cap / base) return std::nullopt;
    out *= base;
  }
  return out;
}

// Advances a mixed-radix counter; false after the last state.
bool Next(std::vector<int>& digits, int radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix) return true;
    digits[k] = 0;
  }
  return false;
}

constexpr double kTieTolerance = 1e-12;

}  // namespace

GameInstance extremal_valuations(const GameSkeleton& skeleton,
                                 const Allocation& a_ne,
                                 const Allocation& a_opt,
                                 UncertaintyLevel delta) {
  const std::size_t n = skeleton.action_sets.size();
  if (a_ne.size() != n || a_opt.size() != n) {
    throw ValidationError("extremal valuations: allocation size mismatch");
  }
  const double d = delta.delta();
  std::vector<std::vector<double>> valuations(n, skeleton.true_values);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& actions = skeleton.action_sets[i];
    auto pick = [&](const Allocation& a) -> ResourceSet {
      const int c = a[i];
      if (c < 0 || static_cast<std::size_t>(c) >= actions.size()) {
        throw ValidationError("extremal valuations: action index out of range");
      }
      ResourceSet s = actions[static_cast<std::size_t>(c)];
      std::sort(s.begin(), s.end());
      return s;
    };
    const ResourceSet ne = pick(a_ne);
    const ResourceSet opt = pick(a_opt);
    for (int r : ne) {
      if (!Contains(opt, r)) valuations[i][static_cast<std::size_t>(r)] *= 1.0 + d;
    }
    for (int r : opt) {
      if (!Contains(ne, r)) valuations[i][static_cast<std::size_t>(r)] *= 1.0 - d;
    }
  }
  return GameInstance(skeleton.true_values, skeleton.action_sets,
                      std::move(valuations), skeleton.basis);
}

SweepResult brute_force_class_poa(int n, int m, const BasisPair& basis,
                                  UncertaintyLevel delta,
                                  const std::vector<double>& value_grid,
                                  const SweepOptions& options) {
  if (n < 1 || n > kMaxSweepPlayers) {
    throw SizeExceeded("sweep: n must satisfy 1 <= n <= 3");
  }
  if (m < 1 || m > kMaxSweepResources) {
    throw SizeExceeded("sweep: m must satisfy 1 <= m <= 4");
  }
  if (basis.n() != n) throw ValidationError("sweep: basis.n() must equal n");
  if (value_grid.empty()) throw ValidationError("sweep: empty value grid");
  for (double v : value_grid) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ValidationError("sweep: grid values must be positive and finite");
    }
  }

  const int subsets = 1 << m;
  const int pairs = subsets * subsets;
  const std::uint64_t cap = options.budget;
  auto over = [&]() -> SweepResult {
    throw BudgetExceeded("sweep: game count exceeds budget of " +
                         std::to_string(cap));
  };
  const auto value_count = BoundedPow(value_grid.size(), m, cap);
  const auto pair_count = BoundedPow(static_cast<std::uint64_t>(pairs), n, cap);
  const auto val_count =
      options.full_interval ? BoundedPow(3, n * m, cap) : std::optional<std::uint64_t>(1);
  if (!value_count || !pair_count || !val_count) return over();
  if (*value_count > cap / *pair_count) return over();
  const std::uint64_t partial = *value_count * *pair_count;
  if (partial > cap / *val_count || partial * *val_count > cap) return over();

  const Allocation a_ne(std::vector<int>(static_cast<std::size_t>(n), 0));
  const Allocation a_opt(std::vector<int>(static_cast<std::size_t>(n), 1));
  const double d = delta.delta();

  SweepResult result;
  result.worst_poa = std::numeric_limits<double>::infinity();
  std::string best_serial;

  auto consider = [&](GameInstance game) {
    ++result.games_built;
    if (!is_equilibrium(game, a_ne, options.tol)) return;
    ++result.games_kept;
    const std::optional<double> poa = poa_of_instance(game, kDefaultJointBudget, options.tol);
    if (!poa) return;  // unreachable: a_ne is an equilibrium
    if (options.observer) options.observer(game, *poa);
    if (*poa < result.worst_poa - kTieTolerance) {
      result.worst_poa = *poa;
      best_serial = serialize_game(game);
      result.witness = std::move(game);
    } else if (*poa <= result.worst_poa + kTieTolerance) {
      std::string serial = serialize_game(game);
      if (serial < best_serial) {
        result.worst_poa = std::min(result.worst_poa, *poa);
        best_serial = std::move(serial);
        result.witness = std::move(game);
      }
    }
  };

  std::vector<int> value_idx(static_cast<std::size_t>(m), 0);
  do {
    GameSkeleton skeleton{std::vector<double>(static_cast<std::size_t>(m)), {}, basis};
    for (int r = 0; r < m; ++r) {
      skeleton.true_values[static_cast<std::size_t>(r)] =
          value_grid[static_cast<std::size_t>(value_idx[static_cast<std::size_t>(r)])];
    }
    std::vector<int> pair_idx(static_cast<std::size_t>(n), 0);
    do {
      skeleton.action_sets.assign(static_cast<std::size_t>(n), {});
      for (int i = 0; i < n; ++i) {
        const int p = pair_idx[static_cast<std::size_t>(i)];
        skeleton.action_sets[static_cast<std::size_t>(i)] = {
            SubsetFromMask(static_cast<unsigned>(p / subsets), m),
            SubsetFromMask(static_cast<unsigned>(p % subsets), m)};
      }
      if (!options.full_interval) {
        consider(extremal_valuations(skeleton, a_ne, a_opt, delta));
        continue;
      }
      std::vector<int> level(static_cast<std::size_t>(n * m), 0);
      do {
        std::vector<std::vector<double>> valuations(
            static_cast<std::size_t>(n), skeleton.true_values);
        for (int i = 0; i < n; ++i) {
          for (int r = 0; r < m; ++r) {
            const int l = level[static_cast<std::size_t>(i * m + r)];
            valuations[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *=
                1.0 + (l - 1) * d;
          }
        }
        consider(GameInstance(skeleton.true_values, skeleton.action_sets,
                              std::move(valuations), basis));
      } while (Next(level, 3));
    } while (Next(pair_idx, pairs));
  } while (Next(value_idx, static_cast<int>(value_grid.size())));

  return result;
}

std::string sweep_csv_header() { return "config,worst_poa,class_poa,gap"; }

std::string sweep_csv_row(const std::string& config, double worst_poa,
                          double class_poa) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), ",%.12g,%.12g,%.12g", worst_poa, class_poa,
                worst_poa - class_poa);
  return config + buf;
}

GameInstance no_pne_example(double d) {
  if (!(d > 0.0 && d < 1.0)) {
    throw ValidationError("no_pne_example: d must lie in (0, 1)");
  }
  const double hi = 1.0 + d;
  const double lo = 1.0 - d;
  return GameInstance({1.0, 1.0, 1.0, 1.0},
                      {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}},
                      {{hi, lo, hi, lo}, {lo, hi, lo, hi}},
                      BasisPair({0.0, 1.0, 1.0}, {0.0, 1.0, 0.0}));
}

BestResponsePath best_response_path(const GameInstance& game,
                                    const Allocation& start,
                                    std::size_t max_steps, double tol) {
  game.CheckAllocation(start);
  BestResponsePath path;
  path.states.push_back(start);
  for (std::size_t step = 0;; ++step) {
    const Allocation& cur = path.states.back();
    std::optional<Allocation> next;
    for (int i = 0; i < game.num_players(); ++i) {
      const BestResponse br = best_response(game, i, cur);
      if (br.utility > utility(game, i, cur) + tol) {
        next = cur.WithChoice(static_cast<std::size_t>(i), br.action);
        break;
      }
    }
    if (!next) {
      path.reached_equilibrium = true;
      return path;
    }
    if (step == max_steps) return path;
    const auto seen = std::find(path.states.begin(), path.states.end(), *next);
    if (seen != path.states.end()) {
      path.cycle_start = static_cast<std::size_t>(seen - path.states.begin());
      return path;
    }
    path.states.push_back(std::move(*next));
  }
}

}  // namespace robustpoa
