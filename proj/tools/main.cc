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

// Command-line front end. Exit codes: 0 success, 2 invalid input,
// 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "robustpoa/errors.h"
#include "robustpoa/experiments.h"
#include "robustpoa/json_io.h"
#include "robustpoa/oracle.h"
#include "robustpoa/poa_lp.h"
#include "robustpoa/set_cover.h"

namespace {

using nlohmann::json;
using namespace robustpoa;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format;  // empty: the subcommand's natural format

  bool Json(bool by_default) const {
    return format.empty() ? by_default : format == "json";
  }
  double tol = kEquilibriumTolerance;
};

void Emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file " + g.out);
  f << text;
}

std::vector<double> WithLeadingZero(const std::vector<double>& tail) {
  std::vector<double> out{0.0};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// w/u given inline (without the leading zero), through --set-cover, or in a
// basis file {"w": [...], "u": [...]} holding full n+1 arrays.
struct BasisArgs {
  bool set_cover = false;
  std::vector<double> w;
  std::vector<double> u;
  std::string basis_file;
  std::optional<int> n;

  void Register(CLI::App* cmd, bool need_u) {
    cmd->add_flag("--set-cover", set_cover, "Use w(k) = 1 for k >= 1");
    cmd->add_option("--w", w, "Welfare curve w(1..n)")->delimiter(',');
    if (need_u) {
      cmd->add_option("--u", u, "Utility curve u(1..n)")->delimiter(',');
      cmd->add_option("--basis", basis_file, "JSON file with full w and u arrays");
    }
    cmd->add_option("--n", n, "Number of players");
  }

  std::vector<double> Welfare(std::size_t fallback_n) const {
    if (set_cover) {
      if (!w.empty()) throw ValidationError("--set-cover and --w are exclusive");
      const int players = n.value_or(static_cast<int>(fallback_n));
      return set_cover_welfare(players);
    }
    if (w.empty()) throw ValidationError("a welfare curve is required (--w or --set-cover)");
    return WithLeadingZero(w);
  }

  BasisPair Basis() const {
    if (!basis_file.empty()) {
      const json doc = ReadJsonFile(basis_file);
      try {
        return BasisPair(doc.at("w").get<std::vector<double>>(),
                         doc.at("u").get<std::vector<double>>());
      } catch (const json::exception& e) {
        throw ValidationError(basis_file + ": " + e.what());
      }
    }
    if (u.empty()) throw ValidationError("a utility curve is required (--u)");
    std::vector<double> full_u = WithLeadingZero(u);
    std::vector<double> full_w = Welfare(u.size());
    if (n && static_cast<std::size_t>(*n) + 1 != full_u.size()) {
      throw ValidationError("--n must equal the number of --u entries");
    }
    return BasisPair(std::move(full_w), std::move(full_u));
  }
};

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

int Run(int argc, char** argv) {
  CLI::App app{"Price-of-anarchy guarantees under bounded valuation uncertainty"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Output path (default: standard output)");
  app.add_option("--format", g.format, "csv or json (default depends on the command)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", g.tol, "Equilibrium tolerance");

  // poa
  auto* poa = app.add_subcommand("poa", "Class PoA for a basis pair");
  BasisArgs poa_basis;
  poa_basis.Register(poa, true);
  double poa_delta = 0.0;
  std::string poa_method = "primal";
  poa->add_option("--delta", poa_delta, "Uncertainty level in [0,1)");
  poa->add_option("--method", poa_method, "primal, dual or closed")
      ->check(CLI::IsMember({"primal", "dual", "closed"}));
  poa->callback([&] {
    const BasisPair basis = poa_basis.Basis();
    const UncertaintyLevel delta(poa_delta);
    PoaReport report;
    if (poa_method == "primal") {
      report = poa_class(basis, delta);
    } else if (poa_method == "dual") {
      report = poa_class_dual(basis, delta);
    } else {
      for (int k = 1; k <= basis.n(); ++k) {
        if (basis.w(k) != 1.0) {
          throw ValidationError("--method closed requires set covering welfare");
        }
      }
      const auto u = basis.u_values();
      report.poa = setcover_poa(u, delta, basis.n());
      report.method = PoaMethod::kClosedForm;
      report.certificate = ClosedFormCertificate{"setcover"};
    }
    Emit(g, Dump(report_to_json(report)));
  });

  // design
  auto* design = app.add_subcommand("design", "Optimal utility design by LP");
  BasisArgs design_basis;
  design_basis.Register(design, false);
  double design_delta = 0.0;
  design->add_option("--delta", design_delta, "Uncertainty level in [0,1)");
  design->callback([&] {
    if (design_basis.set_cover && !design_basis.n) {
      throw ValidationError("--set-cover needs --n");
    }
    const std::vector<double> w = design_basis.Welfare(0);
    const DesignResult result = optimal_design(w, UncertaintyLevel(design_delta));
    json doc = design_to_json(result.design);
    doc["report"] = report_to_json(result.report);
    Emit(g, Dump(doc));
  });

  // setcover poa|design|mismatch
  auto* sc = app.add_subcommand("setcover", "Set covering closed forms");
  sc->require_subcommand(1);
  auto* sc_poa = sc->add_subcommand("poa", "Closed-form class PoA");
  std::vector<double> sc_u;
  double sc_delta = 0.0;
  std::optional<int> sc_n;
  sc_poa->add_option("--u", sc_u, "u(1..n)")->delimiter(',')->required();
  sc_poa->add_option("--delta", sc_delta, "Uncertainty level");
  sc_poa->add_option("--n", sc_n, "Number of players");
  sc_poa->callback([&] {
    const std::vector<double> u = WithLeadingZero(sc_u);
    const int n = sc_n.value_or(static_cast<int>(sc_u.size()));
    if (static_cast<std::size_t>(n) + 1 != u.size()) {
      throw ValidationError("--n must equal the number of --u entries");
    }
    PoaReport report;
    report.poa = setcover_poa(u, UncertaintyLevel(sc_delta), n);
    report.method = PoaMethod::kClosedForm;
    report.certificate = ClosedFormCertificate{"setcover"};
    Emit(g, Dump(report_to_json(report)));
  });

  auto* sc_design = sc->add_subcommand("design", "Closed-form optimal design");
  int scd_n = 2;
  double scd_delta = 0.0;
  bool scd_limit = false;
  sc_design->add_option("--n", scd_n, "Players (finite design) or j_max (--limit)");
  sc_design->add_option("--delta", scd_delta, "Uncertainty level");
  sc_design->add_flag("--limit", scd_limit, "Use the n -> infinity design");
  sc_design->callback([&] {
    const UncertaintyLevel delta(scd_delta);
    json doc;
    if (scd_limit) {
      doc = design_to_json(optimal_design_limit(delta, scd_n));
      doc["poa"] = optimal_poa_limit(delta);
    } else {
      const FiniteDesign fd = optimal_design_finite(scd_n, delta);
      doc = design_to_json(fd.design);
      doc["poa"] = fd.poa;
    }
    Emit(g, Dump(doc));
  });

  auto* sc_mis = sc->add_subcommand("mismatch", "PoA of a design tuned to the wrong level");
  std::vector<double> mis_design, mis_true;
  sc_mis->add_option("--delta-design", mis_design, "Design level(s)")
      ->delimiter(',')->required();
  sc_mis->add_option("--delta-true", mis_true, "Realized level(s)")
      ->delimiter(',')->required();
  sc_mis->callback([&] {
    std::string csv = "delta_design,delta_true,poa,regime\n";
    json rows = json::array();
    for (double dd : mis_design) {
      for (double dt : mis_true) {
        const MismatchReport r = mismatch_poa(UncertaintyLevel(dd), UncertaintyLevel(dt));
        csv += format_real(dd) + "," + format_real(dt) + "," + format_real(r.poa) + "," +
               std::string(ToString(r.regime)) + "\n";
        rows.push_back({{"delta_design", dd}, {"delta_true", dt}, {"poa", r.poa},
                        {"regime", std::string(ToString(r.regime))}});
      }
    }
    Emit(g, g.Json(false) ? Dump(rows) : csv);
  });

  // worstcase
  auto* wc = app.add_subcommand("worstcase", "Build the tight set covering instance");
  int wc_n = 2;
  double wc_delta = 0.0;
  wc->add_option("--n", wc_n, "Players, 2..8");
  wc->add_option("--delta", wc_delta, "Uncertainty level");
  wc->callback([&] {
    const UncertaintyLevel delta(wc_delta);
    const WorstCaseGame wcg = build_worstcase_game(wc_n, delta);
    const std::optional<double> inst = poa_of_instance(wcg.game, kDefaultJointBudget, g.tol);
    const double formula = optimal_poa_finite(wc_n, delta);
    if (!g.out.empty()) Emit(g, Dump(game_to_json(wcg.game)));
    if (!inst) throw NumericalFailure("worst-case game has no equilibrium");
    if (!g.Json(false)) {
      std::cout << "instance_poa,formula_poa\n"
                << format_real(*inst) << "," << format_real(formula) << "\n";
    } else {
      std::cout << Dump({{"instance_poa", *inst}, {"formula_poa", formula}});
    }
  });

  // oracle sweep
  auto* oracle = app.add_subcommand("oracle", "Brute-force checks");
  oracle->require_subcommand(1);
  auto* sweep = oracle->add_subcommand("sweep", "Exhaustive small-game sweep");
  int sw_n = 2, sw_m = 3;
  std::vector<double> sw_u{1.0, 0.5}, sw_grid{1.0};
  double sw_delta = 0.0;
  bool sw_full = false;
  std::uint64_t sw_budget = SweepOptions{}.budget;
  std::string sw_witness;
  sweep->add_option("--n", sw_n, "Players, 1..3");
  sweep->add_option("--m", sw_m, "Resources, 1..4");
  sweep->add_option("--u", sw_u, "Set covering utility u(1..n)")->delimiter(',');
  sweep->add_option("--delta", sw_delta, "Uncertainty level");
  sweep->add_option("--grid", sw_grid, "Resource value grid")->delimiter(',');
  sweep->add_flag("--full-interval", sw_full, "Search interior valuations too");
  sweep->add_option("--budget", sw_budget, "Maximum number of games");
  sweep->add_option("--witness", sw_witness, "Write the witness game JSON here");
  sweep->callback([&] {
    std::vector<double> u = WithLeadingZero(sw_u);
    if (static_cast<int>(u.size()) != sw_n + 1) {
      throw ValidationError("--u must have n entries");
    }
    const BasisPair basis = BasisPair::SetCovering(u);
    const UncertaintyLevel delta(sw_delta);
    SweepOptions opts;
    opts.budget = sw_budget;
    opts.full_interval = sw_full;
    opts.tol = g.tol;
    const SweepResult res = brute_force_class_poa(sw_n, sw_m, basis, delta, sw_grid, opts);
    const double cls = poa_class(basis, delta).poa;
    std::string grid;
    for (double v : sw_grid) grid += (grid.empty() ? "" : "|") + format_real(v);
    const std::string config = "n=" + std::to_string(sw_n) + ";m=" + std::to_string(sw_m) +
                               ";delta=" + format_real(sw_delta) + ";grid=" + grid;
    Emit(g, sweep_csv_header() + "\n" + sweep_csv_row(config, res.worst_poa, cls) + "\n");
    if (!sw_witness.empty() && res.witness) {
      std::ofstream f(sw_witness);
      if (!f) throw ValidationError("cannot open " + sw_witness);
      f << Dump(game_to_json(*res.witness));
    }
  });

  // fig1 / fig2
  auto* fig1 = app.add_subcommand("fig1", "Designs at each level evaluated at delta_true");
  Fig1Options f1;
  fig1->add_option("--count", f1.count, "Number of sampled welfare curves");
  fig1->add_option("--n", f1.n, "Players");
  fig1->add_option("--delta-true", f1.delta_true, "Realized uncertainty");
  fig1->callback([&] {
    f1.seed = g.seed;
    const auto rows = run_fig1(f1);
    if (g.Json(false)) {
      json doc = json::array();
      for (const auto& r : rows) doc.push_back({{"w_id", r.w_id}, {"delta", r.delta}, {"poa", r.poa}});
      Emit(g, Dump(doc));
    } else {
      Emit(g, fig1_csv(rows));
    }
  });

  auto* fig2 = app.add_subcommand("fig2", "Mismatch curves");
  std::vector<double> f2_true{0.2, 0.3, 0.4};
  fig2->add_option("--delta-true", f2_true, "Realized levels")->delimiter(',');
  fig2->callback([&] {
    const auto rows = run_fig2(f2_true);
    if (g.Json(false)) {
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"delta_true", r.delta_true}, {"delta_design", r.delta_design},
                       {"poa", r.poa}});
      }
      Emit(g, Dump(doc));
    } else {
      Emit(g, fig2_csv(rows));
    }
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Equilibria and PoA of a game file");
  std::string game_path;
  analyze->add_option("game", game_path, "Game JSON")->required();
  analyze->callback([&] {
    const GameInstance game = game_from_json(ReadJsonFile(game_path));
    const InstanceAnalysis a = analyze_instance(game, kDefaultJointBudget, g.tol);
    json doc;
    doc["equilibria"] = json::array();
    for (const auto& e : a.equilibria) {
      doc["equilibria"].push_back(std::vector<int>(e.choices().begin(), e.choices().end()));
    }
    doc["optimal_welfare"] = a.optimal_welfare;
    doc["poa"] = a.poa ? json(*a.poa) : json(nullptr);
    doc["uncertainty"] = uncertainty_of(game);
    Emit(g, Dump(doc));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const robustpoa::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const robustpoa::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const robustpoa::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
