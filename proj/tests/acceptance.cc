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

// Acceptance gate. Prints one PASS/FAIL line per criterion; with
// `--criterion N` only criterion N runs. Exit status is nonzero when any
// selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lp_reference.h"
#include "robustpoa/experiments.h"
#include "robustpoa/lp.h"
#include "robustpoa/oracle.h"
#include "robustpoa/poa_lp.h"
#include "robustpoa/set_cover.h"

namespace robustpoa {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void Note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string Fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

// 1. Set-covering optimal PoA under complete information.
Outcome Criterion1() {
  Outcome o;
  const double lim = optimal_poa_limit(UncertaintyLevel(0.0));
  if (std::abs(lim - 0.632121) > 1e-6) o.Fail("limit " + Fmt("%.9f", lim));
  double prev = 1.0;
  for (int n = 2; n <= 12; ++n) {
    const double p = optimal_design_finite(n, UncertaintyLevel(0.0)).poa;
    if (!(p < prev)) o.Fail("not decreasing at n=" + std::to_string(n));
    prev = p;
  }
  const double gap = std::abs(prev - (1.0 - std::exp(-1.0)));
  if (gap > 5e-3) o.Fail("n=12 gap " + Fmt("%.3g", gap));
  o.Note("limit=" + Fmt("%.9f", lim) + " n12=" + Fmt("%.9f", prev));
  return o;
}

// 2. Design LP, recursion formula and closed-form evaluation agree.
Outcome Criterion2() {
  Outcome o;
  int cells = 0, bad = 0;
  for (int n = 2; n <= 6; ++n) {
    for (double d : {0.0, 0.2, 0.5, 0.8}) {
      const UncertaintyLevel delta(d);
      ++cells;
      const double lp = optimal_design(set_cover_welfare(n), delta).report.poa;
      const FiniteDesign rec = optimal_design_finite(n, delta);
      const double closed = setcover_poa(rec.design, delta, n);
      const double spread = std::max({std::abs(lp - rec.poa), std::abs(lp - closed),
                                      std::abs(rec.poa - closed)});
      if (spread > 1e-6) {
        ++bad;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "(n=%d,d=%.1f) lp=%.6f formula=%.6f eval=%.6f", n, d,
                      lp, rec.poa, closed);
        o.Fail(buf);
      }
    }
  }
  const double two = optimal_design(set_cover_welfare(2), UncertaintyLevel(0.0)).report.poa;
  const double three = optimal_design(set_cover_welfare(3), UncertaintyLevel(0.0)).report.poa;
  if (std::abs(two - 2.0 / 3.0) > 1e-9) o.Fail("n=2 d=0 is " + Fmt("%.12f", two));
  if (std::abs(three - 7.0 / 11.0) > 1e-9) o.Fail("n=3 d=0 is " + Fmt("%.12f", three));
  if (std::abs(optimal_poa_finite(2, UncertaintyLevel(0.0)) - 2.0 / 3.0) > 1e-9) o.Fail("formula n=2");
  if (std::abs(optimal_poa_finite(3, UncertaintyLevel(0.0)) - 7.0 / 11.0) > 1e-9) o.Fail("formula n=3");
  o.Note(std::to_string(cells) + " cells agree");
  if (bad) o.detail = std::to_string(bad) + "/" + std::to_string(cells) + " cells disagree: " + o.detail;
  return o;
}

// 3. The tight instance attains the finite-n formula.
Outcome Criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    for (double d : {0.0, 0.3, 0.5}) {
      const UncertaintyLevel delta(d);
      const WorstCaseGame g = build_worstcase_game(n, delta);
      const auto poa = poa_of_instance(g.game);
      const double formula = optimal_poa_finite(n, delta);
      if (!poa || std::abs(*poa - formula) > 1e-9) {
        o.Fail("n=" + std::to_string(n) + " d=" + Fmt("%.1f", d) + " instance " +
               Fmt("%.12f", poa.value_or(-1.0)) + " vs " + Fmt("%.12f", formula));
      }
      if (!is_equilibrium(g.game, g.equilibrium)) o.Fail("a_ne not an equilibrium");
      for (int k = 0; k < 20; ++k) {
        std::vector<double> u(n + 1, 0.0);
        u[1] = 1.0;
        for (int j = 2; j <= n; ++j) u[j] = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const WorstCaseGame alt = build_worstcase_game(n, delta, u);
        if (!is_equilibrium(alt.game, alt.equilibrium)) {
          o.Fail("a_ne breaks under a random design at n=" + std::to_string(n));
        }
      }
    }
  }
  o.Note("9 configurations, 180 random designs");
  return o;
}

// 4. Primal LP against the closed form over 60 configurations.
Outcome Criterion4() {
  Outcome o;
  int configs = 0;
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (double d : {0.0, 0.2, 0.5, 0.8}) {
      const UncertaintyLevel delta(d);
      std::vector<std::vector<double>> designs;
      designs.push_back(optimal_design(set_cover_welfare(n), delta).design.u);
      std::vector<double> harmonic(n + 1, 0.0), unit(n + 1, 0.0);
      for (int k = 1; k <= n; ++k) harmonic[k] = 1.0 / k;
      unit[1] = 1.0;
      designs.push_back(harmonic);
      designs.push_back(unit);
      for (const auto& u : designs) {
        ++configs;
        const double lp = poa_class(BasisPair::SetCovering(u), delta).poa;
        const double closed = setcover_poa(u, delta, n);
        worst = std::max(worst, std::abs(lp - closed));
        if (std::abs(lp - closed) > 1e-6) {
          o.Fail("n=" + std::to_string(n) + " d=" + Fmt("%.1f", d) + " lp " + Fmt("%.9f", lp) +
                 " closed " + Fmt("%.9f", closed));
        }
      }
    }
  }
  if (configs != 60) o.Fail("ran " + std::to_string(configs) + " configurations");
  o.Note(std::to_string(configs) + " configurations, max gap " + Fmt("%.2g", worst));
  return o;
}

// 5. Mismatch curve.
Outcome Criterion5() {
  Outcome o;
  for (int t = 1; t <= 9; ++t) {
    const UncertaintyLevel dt(t / 10.0);
    const double gap = std::abs(mismatch_poa(dt, dt).poa - optimal_poa_limit(dt));
    if (gap > 1e-12) o.Fail("diagonal gap " + Fmt("%.3g", gap) + " at " + Fmt("%.1f", t / 10.0));
  }
  const double under = mismatch_poa(UncertaintyLevel(0.0), UncertaintyLevel(0.5)).poa;
  const double over = mismatch_poa(UncertaintyLevel(0.5), UncertaintyLevel(0.0)).poa;
  if (std::abs(under - 0.279175) > 1e-5) o.Fail("(0, 0.5) gives " + Fmt("%.6f", under));
  if (std::abs(over - 0.542720) > 1e-5) o.Fail("(0.5, 0) gives " + Fmt("%.6f", over));
  int pairs = 0;
  for (int d = 0; d < 100; ++d) {
    for (int t = 0; t < 100; ++t) {
      ++pairs;
      const UncertaintyLevel dt(t / 100.0);
      if (mismatch_poa(UncertaintyLevel(d / 100.0), dt).poa > optimal_poa_limit(dt) + 1e-9) {
        o.Fail("dominance violated at (" + std::to_string(d) + "," + std::to_string(t) + ")");
      }
    }
  }
  o.Note("(0,0.5)=" + Fmt("%.6f", under) + " (0.5,0)=" + Fmt("%.6f", over) + ", " +
         std::to_string(pairs) + " grid pairs dominated");
  return o;
}

// 6. Figure 1 argmax property.
Outcome Criterion6() {
  Outcome o;
  const Fig1Options opts;
  const auto rows = run_fig1(opts);
  const auto arg = fig1_argmax(rows);
  if (static_cast<int>(arg.size()) != opts.count) o.Fail("missing curves");
  int good = 0;
  for (std::size_t i = 0; i < arg.size(); ++i) {
    if (std::abs(arg[i] - opts.delta_true) <= opts.grid_step + 1e-9) {
      ++good;
    } else {
      o.Fail("w_id " + std::to_string(i) + " peaks at " + Fmt("%.2f", arg[i]));
    }
  }
  for (const auto& r : rows) {
    if (!(r.poa > 0.0 && r.poa <= 1.0)) o.Fail("poa out of (0,1]");
  }
  o.Note(std::to_string(good) + "/" + std::to_string(opts.count) + " curves peak at 0.3 (seed " +
         std::to_string(opts.seed) + ")");
  return o;
}

// 7. Exhaustive sweep against the class bound.
Outcome Criterion7() {
  Outcome o;
  const BasisPair basis = BasisPair::SetCovering({0.0, 1.0, 0.5});
  const std::vector<double> grid{1.0, 3.0, 9.0};
  std::string note;
  for (double d : {0.0, 0.5}) {
    const UncertaintyLevel delta(d);
    const SweepResult r = brute_force_class_poa(2, 3, basis, delta, grid);
    const double cls = poa_class(basis, delta).poa;
    if (r.worst_poa < cls - 1e-6) {
      o.Fail("d=" + Fmt("%.1f", d) + " worst " + Fmt("%.9f", r.worst_poa) + " < class " +
             Fmt("%.9f", cls));
    }
    if (!r.witness || uncertainty_of(*r.witness) > d + 1e-12 ||
        !is_equilibrium(*r.witness, Allocation({0, 0}))) {
      o.Fail("unsound witness at d=" + Fmt("%.1f", d));
    }
    if (d == 0.0 && std::abs(r.worst_poa - 2.0 / 3.0) > 1e-9) {
      o.Fail("d=0 sweep reaches " + Fmt("%.9f", r.worst_poa) + ", not 2/3");
    }
    note += (note.empty() ? "" : ", ") + std::string("d=") + Fmt("%.1f", d) + ": worst " +
            Fmt("%.6f", r.worst_poa) + " class " + Fmt("%.6f", cls) + " over " +
            std::to_string(r.games_kept) + " games";
  }
  o.Note(note);
  return o;
}

// 8. No pure equilibrium in the draft example.
Outcome Criterion8() {
  Outcome o;
  const GameInstance g = no_pne_example(0.5);
  if (!enumerate_equilibria(g).empty()) o.Fail("equilibrium found");
  std::size_t longest = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const BestResponsePath p = best_response_path(g, Allocation({a, b}), 16);
      if (p.reached_equilibrium || !p.cycle_start || p.cycle_length() > 4) {
        o.Fail("no short cycle from (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      longest = std::max(longest, p.cycle_length());
    }
  }
  o.Note("0 equilibria, cycle length " + std::to_string(longest));
  return o;
}

// 9. LP engine against vertex enumeration.
Outcome Criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  int optimal = 0;
  for (int k = 0; k < 200; ++k) {
    const LinearProgram lp = testing::RandomSmallLp(rng);
    const LpSolution a = lp_solve(lp);
    const LpSolution b = lp_solve(lp);
    const testing::ReferenceResult ref = testing::SolveByVertexEnumeration(lp);
    if (a.status != ref.status) {
      o.Fail("status mismatch on LP " + std::to_string(k));
      continue;
    }
    if (a.status == LpStatus::kOptimal) {
      ++optimal;
      if (std::abs(a.value - ref.value) > 1e-6) o.Fail("value mismatch on LP " + std::to_string(k));
    }
    const bool same = a.status == b.status && a.pivots == b.pivots &&
                      std::memcmp(&a.value, &b.value, sizeof(double)) == 0 &&
                      a.point.size() == b.point.size() &&
                      (a.point.empty() ||
                       std::memcmp(a.point.data(), b.point.data(), a.point.size() * sizeof(double)) == 0);
    if (!same) o.Fail("nondeterministic solve on LP " + std::to_string(k));
  }
  o.Note("200 LPs (" + std::to_string(optimal) + " optimal), byte-identical repeats");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace robustpoa

int main(int argc, char** argv) {
  using namespace robustpoa;
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
  }
  const std::vector<Criterion> criteria{
      {1, "set-covering optimal PoA, complete information", 1.0, Criterion1},
      {2, "design LP = recursion = closed-form evaluation", 5.0, Criterion2},
      {3, "worst-case tightness of the tight instance", 10.0, Criterion3},
      {4, "primal LP vs closed form", 30.0, Criterion4},
      {5, "mismatch curve", 1.0, Criterion5},
      {6, "figure 1 argmax property", 300.0, Criterion6},
      {7, "oracle consistency", 120.0, Criterion7},
      {8, "no-equilibrium witness", 1.0, Criterion8},
      {9, "LP engine vs vertex enumeration", 10.0, Criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.Fail("took " + Fmt("%.2f", secs) + " s, budget " + Fmt("%.0f", c.budget_seconds) + " s");
    }
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
