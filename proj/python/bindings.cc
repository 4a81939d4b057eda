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

// Python surface. Games cross the boundary as JSON text in the same schema
// the command-line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "robustpoa/errors.h"
#include "robustpoa/game.h"
#include "robustpoa/json_io.h"
#include "robustpoa/poa_lp.h"
#include "robustpoa/set_cover.h"

namespace py = pybind11;

namespace robustpoa {
namespace {

GameInstance ParseGame(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("game json: ") + e.what());
  }
  return game_from_json(doc);
}

double PoaClass(std::vector<double> w, std::vector<double> u, double delta,
                const std::string& method) {
  const BasisPair basis(std::move(w), std::move(u));
  const UncertaintyLevel level(delta);
  if (method == "primal") return poa_class(basis, level).poa;
  if (method == "dual") return poa_class_dual(basis, level).poa;
  if (method == "closed") {
    for (int k = 1; k <= basis.n(); ++k) {
      if (basis.w(k) != 1.0) {
        throw ValidationError("closed form requires set covering welfare");
      }
    }
    return setcover_poa(basis.u_values(), level, basis.n());
  }
  throw ValidationError("method must be primal, dual or closed");
}

py::tuple OptimalDesign(const std::vector<double>& w, double delta) {
  const DesignResult r = optimal_design(w, UncertaintyLevel(delta));
  return py::make_tuple(r.design.u, r.report.poa);
}

py::tuple OptimalDesignFinite(int n, double delta) {
  const FiniteDesign r = optimal_design_finite(n, UncertaintyLevel(delta));
  return py::make_tuple(r.design.u, r.poa);
}

py::dict Mismatch(double delta_design, double delta_true) {
  const MismatchReport r =
      mismatch_poa(UncertaintyLevel(delta_design), UncertaintyLevel(delta_true));
  py::dict out;
  out["poa"] = r.poa;
  out["regime"] = std::string(ToString(r.regime));
  return out;
}

std::string WorstCase(int n, double delta) {
  return game_to_json(build_worstcase_game(n, UncertaintyLevel(delta)).game).dump();
}

py::dict Analyze(const std::string& text, std::uint64_t budget) {
  const InstanceAnalysis a = analyze_instance(ParseGame(text), budget);
  auto choices = [](const Allocation& alloc) {
    return std::vector<int>(alloc.choices().begin(), alloc.choices().end());
  };
  std::vector<std::vector<int>> eq;
  for (const auto& e : a.equilibria) eq.push_back(choices(e));
  py::dict out;
  out["equilibria"] = eq;
  out["optimum"] = choices(a.optimum);
  out["optimal_welfare"] = a.optimal_welfare;
  out["worst_equilibrium"] = a.worst_equilibrium
                                 ? py::cast(choices(*a.worst_equilibrium))
                                 : py::none();
  out["worst_equilibrium_welfare"] = a.worst_equilibrium_welfare;
  out["poa"] = a.poa ? py::cast(*a.poa) : py::none();
  return out;
}

std::optional<double> PoaOfGame(const std::string& text, std::uint64_t budget) {
  return poa_of_instance(ParseGame(text), budget);
}

}  // namespace
}  // namespace robustpoa

PYBIND11_MODULE(_core, m) {
  namespace rp = robustpoa;
  m.doc() = "Native core of robustpoa.";

  // Translators run newest first, so derived types register after bases.
  auto base = py::register_exception<rp::Error>(m, "Error", PyExc_RuntimeError);
  auto validation = py::register_exception<rp::ValidationError>(
      m, "ValidationError", base.ptr());
  py::register_exception<rp::SizeExceeded>(m, "SizeExceeded", validation.ptr());
  py::register_exception<rp::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<rp::NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<rp::DegenerateClass>(m, "DegenerateClass", base.ptr());

  m.def("poa_class", &rp::PoaClass, py::arg("w"), py::arg("u"),
        py::arg("delta"), py::arg("method") = "primal",
        "Class PoA for the basis (w, u) at uncertainty delta.");
  m.def("optimal_design", &rp::OptimalDesign, py::arg("w"), py::arg("delta"),
        "PoA-maximizing utility curve for welfare w: returns (u, poa).");
  m.def(
      "setcover_poa",
      [](const std::vector<double>& u, double delta, int n) {
        return rp::setcover_poa(u, rp::UncertaintyLevel(delta), n);
      },
      py::arg("u"), py::arg("delta"), py::arg("n"));
  m.def("optimal_design_finite", &rp::OptimalDesignFinite, py::arg("n"),
        py::arg("delta"), "Recursion design for n set-covering players: (u, poa).");
  m.def(
      "finite_design_closed_form",
      [](int n, double delta) {
        return rp::finite_design_closed_form(n, rp::UncertaintyLevel(delta));
      },
      py::arg("n"), py::arg("delta"));
  m.def(
      "optimal_poa_finite",
      [](int n, double delta) {
        return rp::optimal_poa_finite(n, rp::UncertaintyLevel(delta));
      },
      py::arg("n"), py::arg("delta"));
  m.def(
      "optimal_design_limit",
      [](double delta, int j_max) {
        return rp::optimal_design_limit(rp::UncertaintyLevel(delta), j_max).u;
      },
      py::arg("delta"), py::arg("j_max"));
  m.def(
      "optimal_poa_limit",
      [](double delta) { return rp::optimal_poa_limit(rp::UncertaintyLevel(delta)); },
      py::arg("delta"));
  m.def("mismatch_poa", &rp::Mismatch, py::arg("delta_design"),
        py::arg("delta_true"));
  m.def("worstcase_game", &rp::WorstCase, py::arg("n"), py::arg("delta"),
        "Tight instance as JSON text; action 0 is the equilibrium.");
  m.def("analyze_game", &rp::Analyze, py::arg("game_json"),
        py::arg("budget") = rp::kDefaultJointBudget);
  m.def("poa_of_game", &rp::PoaOfGame, py::arg("game_json"),
        py::arg("budget") = rp::kDefaultJointBudget);
}
