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

#include "tspace/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "tspace/error.hpp"
#include "tspace/game.hpp"
#include "tspace/hierarchy.hpp"
#include "tspace/model_io.hpp"
#include "tspace/morphism.hpp"
#include "tspace/type_space.hpp"

namespace tspace {
namespace {

using nlohmann::json;

struct Loaded {
  TypeSpace space;
  std::optional<BayesianGame> game;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_game(text)) {
    BayesianGame game = parse_game(text);
    TypeSpace space = game.space();
    return {std::move(space), std::move(game)};
  }
  return {parse_model(text), std::nullopt};
}

TypeSpace load_space(const std::string& path) { return load(path).space; }

BayesianGame load_game(const std::string& path) {
  Loaded loaded = load(path);
  if (!loaded.game) {
    throw Error(ErrorCode::SchemaError, "missing key \"actions\": not a game file");
  }
  return std::move(*loaded.game);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const Violation& v : report.violations) {
    out.push_back({{"kind", v.kind}, {"message", v.message}});
  }
  return out;
}

json map_json(const TypeSpace& src, const TypeSpace& tgt,
              const MeasurableMap& map) {
  json out = json::object();
  for (PointIndex w = 0; w < src.state_count(); ++w) {
    out[src.states()[w]] = tgt.states()[map(w)];
  }
  return out;
}

json measure_json(const FiniteMeasure& mu) {
  json out = json::array();
  for (AtomIndex a = 0; a < mu.weights().size(); ++a) {
    if (mu.weight(a) != 0) {
      out.push_back({mu.base().atom_label(a), to_string(mu.weight(a))});
    }
  }
  return out;
}

json action_set_json(const BayesianGame& game, PlayerIndex i,
                     const ActionSet& set) {
  json out = json::array();
  for (ActionIndex a : set) out.push_back(game.actions(i)[a]);
  return out;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  Loaded loaded = load(path);
  const ValidationReport report = loaded.game ? validate_game(*loaded.game)
                                              : validate_type_space(loaded.space);
  out << canonical_dump({{"kind", loaded.game ? "game" : "model"},
                         {"valid", report.ok()},
                         {"violations", violations_json(report)}});
  return report.ok() ? kExitHolds : kExitFails;
}

int cmd_hierarchy(const std::string& path, std::optional<std::size_t> depth,
                  std::ostream& out) {
  const TypeSpace ts = load_space(path);
  const std::size_t stable = stabilization_depth(ts);
  const std::size_t n = depth.value_or(stable + 1);
  if (n == 0) throw Error(ErrorCode::BadCoordinate, "--depth must be at least 1");
  const HierarchyTable table = HierarchyTable::build(ts, n);
  json players = json::object();
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    json states = json::object();
    for (PointIndex w = 0; w < ts.state_count(); ++w) {
      json levels = json::array();
      for (std::size_t d = 1; d <= n; ++d) {
        levels.push_back({{"depth", d},
                          {"label", table.label(i, d, w)},
                          {"belief", measure_json(table.level(i, d, w).measure)}});
      }
      states[ts.states()[w]] = std::move(levels);
    }
    players[ts.players()[i]] = std::move(states);
  }
  out << canonical_dump({{"depth", n},
                         {"stabilization_depth", stable},
                         {"players", std::move(players)}});
  return kExitHolds;
}

int cmd_quotient(const std::string& path, std::ostream& out) {
  const TypeSpace ts = load_space(path);
  const QuotientResult q = quotient(ts);
  out << canonical_dump({{"depth", q.depth},
                         {"projection", map_json(ts, q.quotient, q.projection)},
                         {"quotient", model_to_json(q.quotient)}});
  return kExitHolds;
}

int cmd_duplicates(const std::string& path, std::ostream& out) {
  const TypeSpace ts = load_space(path);
  json players = json::object();
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    json groups = json::array();
    for (const auto& group : find_duplicates(ts, i)) {
      json g = json::array();
      for (AtomIndex a : group) {
        g.push_back({{"atom", a},
                     {"states", ts.world().labels_of(ts.field(i).atom(a))}});
      }
      groups.push_back(std::move(g));
    }
    players[ts.players()[i]] = std::move(groups);
  }
  out << canonical_dump({{"players", std::move(players)}});
  return kExitHolds;
}

int cmd_morphism(const std::string& src_path, const std::string& tgt_path,
                 const std::optional<std::string>& map_text,
                 std::uint64_t max_search, std::ostream& out) {
  const TypeSpace src = load_space(src_path);
  const TypeSpace tgt = load_space(tgt_path);
  if (!map_text) {
    json found = json::array();
    for (const MeasurableMap& m : find_morphisms(src, tgt, max_search)) {
      found.push_back({{"isomorphism", is_isomorphism(src, tgt, m)},
                       {"map", map_json(src, tgt, m)}});
    }
    const std::size_t count = found.size();
    out << canonical_dump({{"count", count}, {"morphisms", std::move(found)}});
    return kExitHolds;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& item : split(*map_text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ParseError,
                  "--map entry \"" + item + "\" is not of the form a:b");
    }
    pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  const MeasurableMap map = state_map(src, tgt, pairs);
  const MorphismReport report = check_morphism(src, tgt, map);
  json violations = json::array();
  for (const MorphismViolation& v : report.violations) {
    const bool on_params = v.kind == MorphismViolation::Kind::NatureMismatch;
    json entry = {{"kind", to_string(v.kind)},
                  {"message", v.message},
                  {"set", on_params ? src.parameters().labels_of(v.set)
                                    : tgt.world().labels_of(v.set)}};
    if (v.player) entry["player"] = src.players()[*v.player];
    if (v.state) entry["state"] = src.states()[*v.state];
    violations.push_back(std::move(entry));
  }
  json report_json = {{"map", map_json(src, tgt, map)},
                      {"morphism", report.ok()},
                      {"violations", std::move(violations)}};
  if (report.ok()) report_json["isomorphism"] = is_isomorphism(src, tgt, map);
  out << canonical_dump(report_json);
  return report.ok() ? kExitHolds : kExitFails;
}

int cmd_terminality(const std::string& target_path,
                    const std::vector<std::string>& candidate_paths,
                    std::uint64_t max_search, std::ostream& out) {
  const TypeSpace target = load_space(target_path);
  std::vector<TypeSpace> candidates;
  for (const auto& p : candidate_paths) candidates.push_back(load_space(p));
  const TerminalityReport report =
      verify_terminality_small(candidates, target, max_search);
  out << canonical_dump({{"counts", report.counts},
                         {"terminal", report.terminal()}});
  return report.terminal() ? kExitHolds : kExitFails;
}

int cmd_complete(const std::string& path, std::ostream& out) {
  const TypeSpace ts = load_space(path);
  const CompletenessVerdict verdict = check_completeness(ts);
  json players = json::object();
  for (const PlayerCompleteness& p : verdict.players) {
    json entry = {{"complete", p.complete}};
    if (p.witness) {
      json weights = json::array();
      for (AtomIndex a = 0; a < p.witness->weights().size(); ++a) {
        weights.push_back(
            {ts.world().labels_of(p.witness->base().field().atom(a)),
             to_string(p.witness->weight(a))});
      }
      entry["witness"] = std::move(weights);
    }
    players[ts.players()[p.player]] = std::move(entry);
  }
  out << canonical_dump({{"complete", verdict.complete()},
                         {"players", std::move(players)}});
  return verdict.complete() ? kExitHolds : kExitFails;
}

int cmd_believe(const std::string& path, const std::string& event_text,
                const std::string& p_text, const std::optional<std::string>& player,
                const std::string& mode, std::ostream& out) {
  const TypeSpace ts = load_space(path);
  const auto labels = split(event_text, ',');
  const PointSet event = ts.world().to_set(labels);
  const Rational p = parse_rational(p_text);
  PointSet result;
  json report = {{"event", ts.world().labels_of(event)},
                 {"mode", mode},
                 {"p", to_string(p)}};
  if (mode == "belief") {
    if (!player) {
      throw Error(ErrorCode::UnknownPlayer, "--player is required with --mode belief");
    }
    result = belief_operator(ts, ts.player_index(*player), event, p);
    report["player"] = *player;
  } else if (mode == "mutual") {
    result = mutual_belief(ts, event, p);
  } else {
    result = common_belief(ts, event, p);
  }
  report["states"] = ts.world().labels_of(result);
  out << canonical_dump(report);
  return kExitHolds;
}

int cmd_rationalize(const std::string& path, std::ostream& out) {
  const BayesianGame game = load_game(path);
  const TypeSpace& ts = game.space();
  const RationalizabilityResult result = interim_rationalizable(game);
  const std::vector<ActionSet> overall = rationalizable_actions(game);
  json players = json::object();
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    json types = json::array();
    for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
      types.push_back(
          {{"states", ts.world().labels_of(ts.field(i).atom(t))},
           {"actions", action_set_json(game, i, result.survivors(i, t))}});
    }
    players[ts.players()[i]] = {{"actions", action_set_json(game, i, overall[i])},
                                {"types", std::move(types)}};
  }
  out << canonical_dump({{"fixpoint_round", result.fixpoint_round},
                         {"players", std::move(players)}});
  return kExitHolds;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Finite type spaces: hierarchies, morphisms, rationalizability",
               "tspace"};
  app.require_subcommand(1);

  std::string file, src, tgt, target, event, p, mode = "belief";
  std::vector<std::string> candidates;
  std::optional<std::size_t> depth;
  std::optional<std::string> map_text, player;
  std::uint64_t max_search = kDefaultMaxSearch;

  auto* validate = app.add_subcommand("validate", "Check a model or game file");
  validate->add_option("file", file)->required();

  auto* hierarchy = app.add_subcommand("hierarchy", "Belief hierarchies per state");
  hierarchy->add_option("file", file)->required();
  hierarchy->add_option("--depth", depth, "Deepest level (default: stabilization + 1)");

  auto* quot = app.add_subcommand("quotient", "Merge states with equal hierarchies");
  quot->add_option("file", file)->required();

  auto* dup = app.add_subcommand("duplicates", "Types sharing a hierarchy");
  dup->add_option("file", file)->required();

  auto* morph = app.add_subcommand("morphism", "Check or search type morphisms");
  morph->add_option("source", src)->required();
  morph->add_option("target", tgt)->required();
  morph->add_option("--map", map_text, "Explicit map \"a:b,c:d\"");
  morph->add_option("--max-search", max_search, "Candidate-map guard");

  auto* term = app.add_subcommand("terminality", "Count morphisms into a target");
  term->add_option("target", target)->required();
  term->add_option("candidates", candidates)->required();
  term->add_option("--max-search", max_search, "Candidate-map guard");

  auto* complete = app.add_subcommand("complete", "Completeness per player");
  complete->add_option("file", file)->required();

  auto* believe = app.add_subcommand("believe", "Belief operators on an event");
  believe->add_option("file", file)->required();
  believe->add_option("--event", event, "Comma-separated state labels")->required();
  believe->add_option("--p", p, "Threshold p/q")->required();
  believe->add_option("--player", player);
  believe->add_option("--mode", mode)
      ->check(CLI::IsMember({"belief", "mutual", "common"}));

  auto* rat = app.add_subcommand("rationalize", "Interim rationalizable actions");
  rat->add_option("file", file)->required();

  std::vector<const char*> argv{"tspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*hierarchy) return cmd_hierarchy(file, depth, out);
    if (*quot) return cmd_quotient(file, out);
    if (*dup) return cmd_duplicates(file, out);
    if (*morph) return cmd_morphism(src, tgt, map_text, max_search, out);
    if (*term) return cmd_terminality(target, candidates, max_search, out);
    if (*complete) return cmd_complete(file, out);
    if (*believe) return cmd_believe(file, event, p, player, mode, out);
    if (*rat) return cmd_rationalize(file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tspace
