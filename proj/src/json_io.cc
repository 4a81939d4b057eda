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

#include "robustpoa/json_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <type_traits>
#include <variant>

#include "robustpoa/errors.h"

namespace robustpoa {

namespace {

using nlohmann::json;

double Round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("game json: missing key \"") + key + "\"");
  }
  return doc.at(key);
}

template <typename T>
T As(const json& node, const char* what) {
  try {
    return node.get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("game json: bad ") + what + ": " + e.what());
  }
}

}  // namespace

json game_to_json(const GameInstance& game) {
  json doc;
  doc["n"] = game.num_players();
  json resources = json::array();
  for (double y : game.true_values()) resources.push_back({{"value", y}});
  doc["resources"] = std::move(resources);
  doc["actions"] = game.action_sets();
  doc["valuations"] = game.all_valuations();
  const auto w = game.basis().w_values();
  const auto u = game.basis().u_values();
  doc["w"] = std::vector<double>(w.begin(), w.end());
  doc["u"] = std::vector<double>(u.begin(), u.end());
  return doc;
}

GameInstance game_from_json(const json& doc) {
  const int n = As<int>(Require(doc, "n"), "n");
  std::vector<double> values;
  const json& resources = Require(doc, "resources");
  if (!resources.is_array()) throw ValidationError("game json: resources must be an array");
  for (const json& r : resources) values.push_back(As<double>(Require(r, "value"), "value"));
  auto actions =
      As<std::vector<std::vector<ResourceSet>>>(Require(doc, "actions"), "actions");
  if (static_cast<int>(actions.size()) != n) {
    throw ValidationError("game json: \"n\" must equal the number of action sets");
  }
  auto valuations =
      As<std::vector<std::vector<double>>>(Require(doc, "valuations"), "valuations");
  auto w = As<std::vector<double>>(Require(doc, "w"), "w");
  auto u = As<std::vector<double>>(Require(doc, "u"), "u");
  return GameInstance(std::move(values), std::move(actions), std::move(valuations),
                      BasisPair(std::move(w), std::move(u)));
}

json report_to_json(const PoaReport& report) {
  json doc;
  doc["poa"] = report.poa;
  doc["method"] = std::string(ToString(report.method));
  doc["certificate"] = std::visit(
      [](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, PrimalCertificate>) {
          json theta = json::array();
          for (const auto& [t, v] : cert.theta) {
            theta.push_back({{"a", t.a}, {"x", t.x}, {"b", t.b}, {"theta", v}});
          }
          return {{"value", cert.value}, {"unbounded", cert.unbounded},
                  {"theta", std::move(theta)}};
        } else if constexpr (std::is_same_v<T, DualCertificate>) {
          return {{"lambda", cert.lambda}, {"mu", cert.mu}};
        } else {
          return {{"id", cert.id}};
        }
      },
      report.certificate);
  return doc;
}

json design_to_json(const UtilityDesign& design) {
  std::vector<double> u;
  u.reserve(design.u.size());
  for (double v : design.u) u.push_back(Round12(v));
  return {{"u", std::move(u)}, {"provenance", std::string(ToString(design.provenance))}};
}

std::string serialize_game(const GameInstance& game) { return game_to_json(game).dump(); }

}  // namespace robustpoa
