// Copyright 2026 The tspace Authors
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

// JSON model and game documents.
//
// A model document:
//   {
//     "players": ["1", "2"],
//     "parameter_space": {"points": ["s1", "s2"], "atoms": [["s1"], ["s2"]]},
//     "omega": ["w1", "w2"],
//     "fields": {"0": [["w1"], ["w2"]], "1": [...], "2": [...]},
//     "g": {"w1": "s1", "w2": "s2"},
//     "beliefs": {"1": {"0": {"1": "1/1"}, "1": {"1": "1/1"}}, ...}
//   }
// beliefs[i][t][b] is the mass that player i's type t (0-based atom of
// fields[i], in file order) puts on atom b of M_{-i}. The atoms of M_{-i}
// are ordered by their first state in "omega" order; omitted entries are 0.
//
// A game document adds
//   "actions": {"1": ["U", "D"], "2": ["L", "R"]},
//   "payoffs": {"s1": {"U,L": ["2/1", "3/1"], ...}, ...}
// with one payoff per player, in "players" order.
//
// Serialization is canonical: sorted keys, rationals as "p/q" in lowest
// terms, zero belief entries dropped, two-space indentation.

#ifndef TSPACE_MODEL_IO_HPP_
#define TSPACE_MODEL_IO_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "tspace/game.hpp"
#include "tspace/type_space.hpp"

namespace tspace {

// Throws ParseError (malformed JSON, with byte offset), SchemaError (with a
// JSON path), SemanticError (e.g. a belief row that does not sum to 1).
TypeSpace parse_model(std::string_view text);
BayesianGame parse_game(std::string_view text);

// True when the document carries "actions" or "payoffs".
bool looks_like_game(std::string_view text);

nlohmann::json model_to_json(const TypeSpace& ts);
nlohmann::json game_to_json(const BayesianGame& game);
std::string serialize_model(const TypeSpace& ts);
std::string serialize_game(const BayesianGame& game);

// Canonical text of any report or document.
std::string canonical_dump(const nlohmann::json& doc);

std::string read_file(const std::string& path);

}  // namespace tspace

#endif  // TSPACE_MODEL_IO_HPP_
