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

#include "robustpoa/set_cover.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "robustpoa/errors.h"

namespace robustpoa {

namespace {

constexpr double kSeriesRelativeCutoff = 1e-14;

// sum_{k=from}^{to} B^-k / k!, accumulated through term ratios.
double InversePowerSeries(double amp, int from, int to) {
  double term = 1.0;  // B^0 / 0!
  for (int k = 1; k <= from; ++k) term /= amp * k;
  double sum = 0.0;
  for (int k = from; k <= to; ++k) {
    sum += term;
    term /= amp * (k + 1);
  }
  return sum;
}

// 1 / (B^n (n-1) (n-1)!)
double TailTerm(double amp, int n) {
  double t = 1.0 / (amp * (n - 1));
  for (int k = 1; k <= n - 1; ++k) t /= amp * k;
  return t;
}

void CheckFiniteN(int n) {
  if (n < 2 || n > kMaxFiniteDesignPlayers) {
    throw ValidationError("set cover design: n must satisfy 2 <= n <= " +
                          std::to_string(kMaxFiniteDesignPlayers));
  }
}

}  // namespace

Amplification amplification(UncertaintyLevel delta) {
  return {delta.amplification()};
}

std::vector<double> set_cover_welfare(int n) {
  if (n < 1) throw ValidationError("set cover: n must be at least 1");
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 1.0);
  w[0] = 0.0;
  return w;
}

double setcover_poa(std::span<const double> u, UncertaintyLevel delta, int n) {
  if (n < 2) throw ValidationError("set cover poa: n must be at least 2");
  if (u.size() < static_cast<std::size_t>(n) + 1) {
    throw ValidationError("set cover poa: u must have n+1 entries");
  }
  if (std::abs(u[1] - 1.0) > 1e-12) {
    throw ValidationError("set cover poa: u[1] = 1 required");
  }
  const double amp = delta.amplification();
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 1; j <= n - 1; ++j) {
    const double uj = u[static_cast<std::size_t>(j)];
    const double un = u[static_cast<std::size_t>(j) + 1];
    worst = std::max({worst, amp * (j + 1) * un, amp * j * un + 1.0,
                      amp * j * uj - un + 1.0});
  }
  return 1.0 / worst;
}

double setcover_poa(const UtilityDesign& u, UncertaintyLevel delta, int n) {
  return setcover_poa(std::span<const double>(u.u), delta, n);
}

FiniteDesign optimal_design_finite(int n, UncertaintyLevel delta) {
  CheckFiniteN(n);
  const double amp = delta.amplification();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  u[static_cast<std::size_t>(n)] = 1.0;
  for (int j = n - 1; j >= 1; --j) {
    const auto i = static_cast<std::size_t>(j);
    u[i] = u[i + 1] / (amp * j) + (n - 1) * u[static_cast<std::size_t>(n)] / j;
  }
  const double scale = u[1];
  for (auto& v : u) v /= scale;
  u[1] = 1.0;

  FiniteDesign out;
  out.design = {std::move(u), DesignProvenance::kSetCoverRecursion};
  out.poa = optimal_poa_finite(n, delta);
  return out;
}

std::vector<double> finite_design_closed_form(int n, UncertaintyLevel delta) {
  CheckFiniteN(n);
  const double amp = delta.amplification();
  const double tail = TailTerm(amp, n);
  const double denom = tail + InversePowerSeries(amp, 1, n - 1);
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  double lead = 1.0;  // B^{j-1} (j-1)!
  for (int j = 1; j <= n; ++j) {
    const double partial = j <= n - 1 ? InversePowerSeries(amp, j, n - 1) : 0.0;
    u[static_cast<std::size_t>(j)] = lead * (tail + partial) / denom;
    lead *= amp * j;
  }
  return u;
}

double optimal_poa_finite(int n, UncertaintyLevel delta) {
  CheckFiniteN(n);
  const double amp = delta.amplification();
  const double denom = TailTerm(amp, n) + InversePowerSeries(amp, 0, n - 1);
  return 1.0 - 1.0 / denom;
}

double limit_design_value(int j, UncertaintyLevel delta) {
  if (j < 1) throw ValidationError("limit design: j must be at least 1");
  const double amp = delta.amplification();
  // Terms t_k = (j-1)! / (B^{k-j+1} k!): t_j = 1 / (B j),
  // t_{k+1} = t_k / (B (k+1)).
  double term = 1.0 / (amp * j);
  double sum = 0.0;
  for (int k = j; term > kSeriesRelativeCutoff * sum || sum == 0.0; ++k) {
    sum += term;
    term /= amp * (k + 1);
  }
  return sum / std::expm1(1.0 / amp);
}

UtilityDesign optimal_design_limit(UncertaintyLevel delta, int j_max) {
  if (j_max < 1) throw ValidationError("limit design: j_max must be >= 1");
  UtilityDesign design;
  design.provenance = DesignProvenance::kSetCoverLimit;
  design.u.assign(static_cast<std::size_t>(j_max) + 1, 0.0);
  for (int j = 1; j <= j_max; ++j) {
    design.u[static_cast<std::size_t>(j)] = limit_design_value(j, delta);
  }
  design.u[1] = 1.0;
  return design;
}

double optimal_poa_limit(UncertaintyLevel delta) {
  return -std::expm1(-1.0 / delta.amplification());
}

std::string_view ToString(MismatchRegime regime) {
  return regime == MismatchRegime::kUnderestimate ? "Underestimate"
                                                  : "Overestimate";
}

MismatchReport mismatch_poa(UncertaintyLevel delta_design,
                            UncertaintyLevel delta_true) {
  const double amp = delta_design.amplification();
  const double amp_true = delta_true.amplification();
  const double d = 1.0 / std::expm1(1.0 / amp);
  const double ratio = amp_true / amp;

  MismatchReport report{delta_design, delta_true, 0.0,
                        MismatchRegime::kUnderestimate};
  double v;
  if (delta_design.delta() <= delta_true.delta()) {
    v = (ratio - 1.0) * limit_design_value(2, delta_design) + ratio * d + 1.0;
  } else {
    report.regime = MismatchRegime::kOverestimate;
    v = ratio * d + 1.0;
  }
  report.poa = 1.0 / v;
  return report;
}

WorstCaseGame build_worstcase_game(int n, UncertaintyLevel delta) {
  if (n < 2 || n > kMaxWorstCasePlayers) {
    throw SizeExceeded("worst-case game: n must satisfy 2 <= n <= " +
                       std::to_string(kMaxWorstCasePlayers));
  }
  return build_worstcase_game(n, delta, optimal_design_finite(n, delta).design.u);
}

WorstCaseGame build_worstcase_game(int n, UncertaintyLevel delta,
                                   std::vector<double> u) {
  if (n < 2 || n > kMaxWorstCasePlayers) {
    throw SizeExceeded("worst-case game: n must satisfy 2 <= n <= " +
                       std::to_string(kMaxWorstCasePlayers));
  }
  const double amp = delta.amplification();
  const auto players = static_cast<std::size_t>(n);

  std::vector<double> values;
  std::vector<int> group;
  std::vector<ResourceSet> eq_action(players), opt_action(players);

  // r0: player 0 in both actions, everybody else at the equilibrium.
  values.push_back(1.0);
  group.push_back(0);
  for (std::size_t i = 0; i < players; ++i) eq_action[i].push_back(0);
  opt_action[0].push_back(0);

  // Depth-first walk over sequences of distinct players. Visiting children
  // in increasing player order emits each level's labels lexicographically.
  std::vector<int> label;
  std::vector<char> used(players, 0);
  double level_value = 1.0;
  for (int k = 1; k <= n; ++k) {
    level_value *= amp;
    auto emit = [&](auto&& self) -> void {
      if (static_cast<int>(label.size()) == k) {
        const int r = static_cast<int>(values.size());
        values.push_back(level_value);
        group.push_back(k);
        opt_action[static_cast<std::size_t>(label.back())].push_back(r);
        for (std::size_t i = 0; i < players; ++i) {
          if (!used[i]) eq_action[i].push_back(r);
        }
        return;
      }
      for (int p = label.empty() ? 1 : 0; p < n; ++p) {
        if (used[static_cast<std::size_t>(p)]) continue;
        used[static_cast<std::size_t>(p)] = 1;
        label.push_back(p);
        self(self);
        label.pop_back();
        used[static_cast<std::size_t>(p)] = 0;
      }
    };
    emit(emit);
  }

  const std::size_t m = values.size();
  std::vector<std::vector<double>> valuations(players, values);
  for (std::size_t i = 0; i < players; ++i) {
    std::vector<char> in_eq(m, 0), in_opt(m, 0);
    for (int r : eq_action[i]) in_eq[static_cast<std::size_t>(r)] = 1;
    for (int r : opt_action[i]) in_opt[static_cast<std::size_t>(r)] = 1;
    for (std::size_t r = 0; r < m; ++r) {
      if (in_eq[r] && !in_opt[r]) valuations[i][r] = (1.0 + delta.delta()) * values[r];
      if (in_opt[r] && !in_eq[r]) valuations[i][r] = (1.0 - delta.delta()) * values[r];
    }
  }

  std::vector<std::vector<ResourceSet>> actions(players);
  for (std::size_t i = 0; i < players; ++i) {
    actions[i] = {std::move(eq_action[i]), std::move(opt_action[i])};
  }
  GameInstance game(std::move(values), std::move(actions), std::move(valuations),
                    BasisPair::SetCovering(std::move(u)));
  return WorstCaseGame{std::move(game), Allocation(std::vector<int>(players, 0)),
                       Allocation(std::vector<int>(players, 1)),
                       std::move(group)};
}

}  // namespace robustpoa
