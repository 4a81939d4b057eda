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

// Closed-form results for set covering games, w(k) = 1 for k >= 1.

#ifndef ROBUSTPOA_SET_COVER_H_
#define ROBUSTPOA_SET_COVER_H_

#include <span>
#include <string_view>
#include <vector>

#include "robustpoa/game.h"
#include "robustpoa/poa_lp.h"
#include "robustpoa/uncertainty.h"

namespace robustpoa {

struct Amplification {
  double b_factor = 1.0;
};

// (1 + delta) / (1 - delta).
Amplification amplification(UncertaintyLevel delta);

// w = (0, 1, 1, ..., 1) with n+1 entries.
std::vector<double> set_cover_welfare(int n);

// Class PoA of set covering games with n >= 2 players under utility u
// (u[0..n], u[1] = 1):
//   1 / max_{1 <= j <= n-1} max{ B (j+1) u(j+1),
//                                B j u(j+1) + 1,
//                                B j u(j) - u(j+1) + 1 }.
double setcover_poa(std::span<const double> u, UncertaintyLevel delta, int n);
double setcover_poa(const UtilityDesign& u, UncertaintyLevel delta, int n);

struct FiniteDesign {
  UtilityDesign design;  // SetCoverRecursion
  double poa = 0.0;      // finite-n closed-form value
};

inline constexpr int kMaxFiniteDesignPlayers = 20;

// Downward recursion u(n) = 1, u(j) = u(j+1) / (B j) + (n-1) u(n) / j,
// normalized to u(1) = 1, with the closed-form PoA value
//   1 - 1 / ( 1 / (B^n (n-1) (n-1)!) + sum_{k=0}^{n-1} B^-k / k! ).
// The value is exact only while B u(n) <= 1; for small n at large delta the
// design LP does strictly better (compare optimal_design). Requires
// 2 <= n <= 20.
FiniteDesign optimal_design_finite(int n, UncertaintyLevel delta);

// The same normalized design evaluated from its closed form:
//   u(j) = B^{j-1} (j-1)! (T + sum_{k=j}^{n-1} B^-k / k!)
//          / (T + sum_{k=1}^{n-1} B^-k / k!),   T = 1 / (B^n (n-1)(n-1)!).
std::vector<double> finite_design_closed_form(int n, UncertaintyLevel delta);

// Finite-n closed-form PoA value alone.
double optimal_poa_finite(int n, UncertaintyLevel delta);

// Raw series sum_{k>=j} (j-1)! / (B^{k-j+1} (e^{1/B} - 1) k!) for j >= 1.
double limit_design_value(int j, UncertaintyLevel delta);

// The n -> infinity optimal design u*(0..j_max) (u*(0) = 0, u*(1) = 1),
// series truncated once a term is below 1e-14 of the partial sum.
UtilityDesign optimal_design_limit(UncertaintyLevel delta, int j_max);

// 1 - exp(-1/B).
double optimal_poa_limit(UncertaintyLevel delta);

enum class MismatchRegime { kUnderestimate, kOverestimate };
std::string_view ToString(MismatchRegime regime);

struct MismatchReport {
  UncertaintyLevel delta_design{0.0};
  UncertaintyLevel delta_true{0.0};
  double poa = 0.0;
  // Underestimate when delta_design <= delta_true.
  MismatchRegime regime = MismatchRegime::kUnderestimate;
};

// PoA of the limit design for delta_design in the class with realized
// uncertainty delta_true. With D = 1 / (e^{1/B} - 1) and r = B_true / B:
//   V = (r - 1) u*(2) + r D + 1   if delta_design <= delta_true
//   V = r D + 1                   if delta_design >= delta_true
// and PoA = 1 / V.
MismatchReport mismatch_poa(UncertaintyLevel delta_design,
                            UncertaintyLevel delta_true);

inline constexpr int kMaxWorstCasePlayers = 8;

// The tight instance G*: every player has two actions, index 0 being its
// equilibrium action and index 1 its optimal action.
struct WorstCaseGame {
  GameInstance game;
  Allocation equilibrium;  // all zeros
  Allocation optimum;      // all ones
  std::vector<int> group_of_resource;  // level k of each resource
};

// Builds G* for 2 <= n <= 8 with resource groups R_0..R_n of true value B^k.
// R_0 = {r0}; R_k (k >= 1) is labeled by the length-k sequences of distinct
// players whose first element is not player 0, in lexicographic order. A
// label's last player selects the resource at the optimum, the players not in
// the label select it at the equilibrium, and player 0 selects r0 in both
// actions. Valuations sit at the interval endpoints: (1 + delta) y on
// equilibrium-only resources, (1 - delta) y on optimum-only resources.
//
// The basis is set covering with the recursion design of
// optimal_design_finite unless `u` is given. Throws SizeExceeded outside
// 2 <= n <= 8.
WorstCaseGame build_worstcase_game(int n, UncertaintyLevel delta);
WorstCaseGame build_worstcase_game(int n, UncertaintyLevel delta,
                                   std::vector<double> u);

}  // namespace robustpoa

#endif  // ROBUSTPOA_SET_COVER_H_
