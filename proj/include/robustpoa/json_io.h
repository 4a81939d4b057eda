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

// JSON interchange formats.
//
// Game:    {"n": int, "resources": [{"value": y}], "actions": [[[r, ...]]],
//           "valuations": [[y_ir]], "w": [w0..wn], "u": [u0..un]}
// Report:  {"poa": p, "method": "...", "certificate": {...}}
// Design:  {"u": [u0..un], "provenance": "..."}

#ifndef ROBUSTPOA_JSON_IO_H_
#define ROBUSTPOA_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "robustpoa/game.h"
#include "robustpoa/poa_lp.h"

namespace robustpoa {

nlohmann::json game_to_json(const GameInstance& game);

// Throws ValidationError on malformed documents (missing keys, wrong types,
// "n" disagreeing with the action sets) as well as on game-core violations.
GameInstance game_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const PoaReport& report);

// u is written rounded to 12 significant digits.
nlohmann::json design_to_json(const UtilityDesign& design);

// Compact serialization used for canonical comparisons.
std::string serialize_game(const GameInstance& game);

}  // namespace robustpoa

#endif  // ROBUSTPOA_JSON_IO_H_
