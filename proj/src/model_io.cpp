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

#include "tspace/model_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "tspace/error.hpp"

namespace tspace {
namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

[[noreturn]] void semantic(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SemanticError, path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& member(const json& obj, const std::string& key,
                   const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing key \"" + key + "\"");
  return *it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(expect_string(j[k], path + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<std::vector<std::string>> atom_list(const json& j,
                                                const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of atoms");
  std::vector<std::vector<std::string>> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(string_list(j[k], path + "/" + std::to_string(k)));
  }
  return out;
}

Rational rational_at(const json& j, const std::string& path) {
  const std::string text = expect_string(j, path);
  try {
    return parse_rational(text);
  } catch (const Error&) {
    schema(path, "\"" + text + "\" is not a rational of the form p/q");
  }
}

std::size_t index_key(const std::string& key, std::size_t bound,
                      const std::string& path) {
  std::size_t value = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (key.empty() || ec != std::errc() || ptr != end ||
      (key.size() > 1 && key[0] == '0')) {
    schema(path, "key \"" + key + "\" is not an atom index");
  }
  if (value >= bound) {
    semantic(path, "atom index " + key + " out of range (" +
                       std::to_string(bound) + " atoms)");
  }
  return value;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) schema(path, "unknown key \"" + key + "\"");
  }
}

Partition field_of(const std::vector<std::string>& omega, const json& j,
                   const std::string& path) {
  const auto atoms = atom_list(j, path);
  try {
    return FiniteMeasurableSpace::make(omega, atoms).field();
  } catch (const Error& e) {
    semantic(path, e.what());
  }
}

TypeSpace model_from_json(const json& doc) {
  expect_object(doc, "");
  reject_unknown_keys(doc,
                      {"players", "parameter_space", "omega", "fields", "g",
                       "beliefs", "actions", "payoffs"},
                      "");
  TypeSpace::Parts parts;

  parts.players = string_list(member(doc, "players", ""), "/players");
  {
    std::set<std::string> seen;
    for (const auto& id : parts.players) {
      if (id.empty()) semantic("/players", "empty player id");
      if (id == kNature) semantic("/players", "\"0\" is reserved for nature");
      if (!seen.insert(id).second) semantic("/players", "duplicate \"" + id + "\"");
    }
    if (parts.players.empty()) semantic("/players", "no players");
  }

  const json& ps = member(doc, "parameter_space", "");
  expect_object(ps, "/parameter_space");
  reject_unknown_keys(ps, {"points", "atoms"}, "/parameter_space");
  try {
    parts.parameters = FiniteMeasurableSpace::make(
        string_list(member(ps, "points", "/parameter_space"),
                    "/parameter_space/points"),
        atom_list(member(ps, "atoms", "/parameter_space"),
                  "/parameter_space/atoms"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    semantic("/parameter_space", e.what());
  }
  if (parts.parameters.size() == 0) semantic("/parameter_space", "no points");

  parts.states = string_list(member(doc, "omega", ""), "/omega");
  if (parts.states.empty()) semantic("/omega", "no states");
  FiniteMeasurableSpace omega;
  try {
    omega = FiniteMeasurableSpace::discrete(parts.states);
  } catch (const Error& e) {
    semantic("/omega", e.what());
  }

  const json& fields = member(doc, "fields", "");
  expect_object(fields, "/fields");
  {
    std::set<std::string> allowed(parts.players.begin(), parts.players.end());
    allowed.insert(std::string(kNature));
    reject_unknown_keys(fields, allowed, "/fields");
  }
  parts.nature_field = field_of(parts.states, member(fields, "0", "/fields"),
                                "/fields/0");
  for (const auto& id : parts.players) {
    parts.player_fields.push_back(
        field_of(parts.states, member(fields, id, "/fields"), "/fields/" + id));
  }

  const json& g = member(doc, "g", "");
  expect_object(g, "/g");
  parts.nature_map.assign(parts.states.size(), 0);
  for (const auto& [key, value] : g.items()) {
    if (!omega.find(key)) semantic("/g", "unknown state \"" + key + "\"");
  }
  for (PointIndex w = 0; w < parts.states.size(); ++w) {
    const std::string& label = parts.states[w];
    auto it = g.find(label);
    if (it == g.end()) semantic("/g", "state \"" + label + "\" is not assigned");
    const std::string target = expect_string(*it, "/g/" + label);
    auto s = parts.parameters.find(target);
    if (!s) semantic("/g/" + label, "unknown parameter \"" + target + "\"");
    parts.nature_map[w] = *s;
  }

  // M_{-i} is derived here exactly as TypeSpace derives it.
  const json& beliefs = member(doc, "beliefs", "");
  expect_object(beliefs, "/beliefs");
  reject_unknown_keys(
      beliefs, std::set<std::string>(parts.players.begin(), parts.players.end()),
      "/beliefs");
  std::vector<std::vector<std::vector<Rational>>> weights(parts.players.size());
  for (PlayerIndex i = 0; i < parts.players.size(); ++i) {
    const std::string& id = parts.players[i];
    std::vector<Partition> joined{parts.nature_field};
    for (PlayerIndex j = 0; j < parts.players.size(); ++j) {
      if (j != i) joined.push_back(parts.player_fields[j]);
    }
    const std::size_t minus_atoms = sigma_join(joined).atom_count();
    const std::size_t types = parts.player_fields[i].atom_count();
    const std::string base = "/beliefs/" + id;
    const json& rows = member(beliefs, id, "/beliefs");
    expect_object(rows, base);
    weights[i].assign(types, std::vector<Rational>(minus_atoms, Rational(0)));
    std::vector<bool> seen(types, false);
    for (const auto& [tkey, row] : rows.items()) {
      const std::string rpath = base + "/" + tkey;
      const std::size_t t = index_key(tkey, types, rpath);
      seen[t] = true;
      expect_object(row, rpath);
      for (const auto& [bkey, value] : row.items()) {
        const std::string epath = rpath + "/" + bkey;
        const std::size_t b = index_key(bkey, minus_atoms, epath);
        const Rational w = rational_at(value, epath);
        if (w < 0) semantic(epath, "negative probability " + to_string(w));
        weights[i][t][b] = w;
      }
    }
    for (std::size_t t = 0; t < types; ++t) {
      const std::string rpath = base + "/" + std::to_string(t);
      if (!seen[t]) semantic(rpath, "belief row missing");
      Rational sum = 0;
      for (const Rational& w : weights[i][t]) sum += w;
      if (sum != 1) {
        semantic(rpath, "belief row sums to " + to_string(sum) + ", not 1");
      }
    }
  }
  return TypeSpace::make(std::move(parts), weights);
}

BayesianGame game_from_json(const json& doc) {
  TypeSpace ts = model_from_json(doc);
  BayesianGame::Parts parts{ts, {}, {}};

  const json& actions = member(doc, "actions", "");
  expect_object(actions, "/actions");
  reject_unknown_keys(
      actions, std::set<std::string>(ts.players().begin(), ts.players().end()),
      "/actions");
  for (const auto& id : ts.players()) {
    auto list = string_list(member(actions, id, "/actions"), "/actions/" + id);
    if (list.empty()) semantic("/actions/" + id, "no actions");
    parts.actions.push_back(std::move(list));
  }

  std::size_t profiles = 1;
  for (const auto& a : parts.actions) profiles *= a.size();
  std::vector<std::vector<std::string>> profile_labels(profiles);
  std::map<std::string, std::size_t> profile_index;
  for (std::size_t p = 0; p < profiles; ++p) {
    std::size_t rest = p;
    std::vector<std::string> labels(parts.actions.size());
    for (std::size_t i = parts.actions.size(); i-- > 0;) {
      labels[i] = parts.actions[i][rest % parts.actions[i].size()];
      rest /= parts.actions[i].size();
    }
    std::string joined;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      joined += (i ? "," : "") + labels[i];
    }
    profile_index[joined] = p;
  }

  const FiniteMeasurableSpace& params = ts.parameters();
  parts.payoffs.assign(params.size() * profiles, std::nullopt);
  const json& payoffs = member(doc, "payoffs", "");
  expect_object(payoffs, "/payoffs");
  for (const auto& [skey, table] : payoffs.items()) {
    const std::string spath = "/payoffs/" + skey;
    auto s = params.find(skey);
    if (!s) semantic(spath, "unknown parameter \"" + skey + "\"");
    expect_object(table, spath);
    for (const auto& [pkey, vec] : table.items()) {
      const std::string ppath = spath + "/" + pkey;
      auto it = profile_index.find(pkey);
      if (it == profile_index.end()) {
        semantic(ppath, "unknown action profile \"" + pkey + "\"");
      }
      if (!vec.is_array()) schema(ppath, "expected an array of rationals");
      if (vec.size() != ts.player_count()) {
        semantic(ppath, "expected " + std::to_string(ts.player_count()) +
                            " payoffs, found " + std::to_string(vec.size()));
      }
      std::vector<Rational> values;
      for (std::size_t k = 0; k < vec.size(); ++k) {
        values.push_back(rational_at(vec[k], ppath + "/" + std::to_string(k)));
      }
      parts.payoffs[*s * profiles + it->second] = std::move(values);
    }
  }
  try {
    return BayesianGame::make(std::move(parts));
  } catch (const Error& e) {
    semantic("", e.what());
  }
}

json atoms_json(const FiniteMeasurableSpace& space, const Partition& field) {
  json out = json::array();
  for (const PointSet& atom : field.atoms()) out.push_back(space.labels_of(atom));
  return out;
}

}  // namespace

TypeSpace parse_model(std::string_view text) {
  return model_from_json(parse_json(text));
}

BayesianGame parse_game(std::string_view text) {
  return game_from_json(parse_json(text));
}

bool looks_like_game(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && (doc.contains("actions") || doc.contains("payoffs"));
}

json model_to_json(const TypeSpace& ts) {
  json doc;
  doc["players"] = ts.players();
  doc["parameter_space"]["points"] = ts.parameters().labels();
  doc["parameter_space"]["atoms"] =
      atoms_json(ts.parameters(), ts.parameters().field());
  doc["omega"] = ts.states();
  doc["fields"][std::string(kNature)] = atoms_json(ts.world(), ts.nature_field());
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    doc["fields"][ts.players()[i]] = atoms_json(ts.world(), ts.field(i));
  }
  json g = json::object();
  for (PointIndex w = 0; w < ts.state_count(); ++w) {
    g[ts.states()[w]] = ts.parameters().label(ts.nature_of(w));
  }
  doc["g"] = std::move(g);
  json beliefs = json::object();
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    json rows = json::object();
    for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
      json row = json::object();
      const auto& w = ts.belief(i, t).weights();
      for (AtomIndex b = 0; b < w.size(); ++b) {
        if (w[b] != 0) row[std::to_string(b)] = to_string(w[b]);
      }
      rows[std::to_string(t)] = std::move(row);
    }
    beliefs[ts.players()[i]] = std::move(rows);
  }
  doc["beliefs"] = std::move(beliefs);
  return doc;
}

json game_to_json(const BayesianGame& game) {
  json doc = model_to_json(game.space());
  const TypeSpace& ts = game.space();
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    doc["actions"][ts.players()[i]] = game.actions(i);
  }
  json payoffs = json::object();
  const FiniteMeasurableSpace& params = ts.parameters();
  for (PointIndex s = 0; s < params.size(); ++s) {
    json table = json::object();
    for (std::size_t p = 0; p < game.profile_count(); ++p) {
      const auto& entry = game.payoff_entry(s, p);
      if (!entry) continue;
      json vec = json::array();
      for (const Rational& v : *entry) vec.push_back(to_string(v));
      table[game.profile_label(p)] = std::move(vec);
    }
    if (!table.empty()) payoffs[params.label(s)] = std::move(table);
  }
  doc["payoffs"] = std::move(payoffs);
  return doc;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string serialize_model(const TypeSpace& ts) {
  return canonical_dump(model_to_json(ts));
}

std::string serialize_game(const BayesianGame& game) {
  return canonical_dump(game_to_json(game));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tspace
