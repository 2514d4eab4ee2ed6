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

#include "tspace/game.hpp"

#include <algorithm>
#include <set>

#include "tspace/error.hpp"
#include "tspace/simplex.hpp"

namespace tspace {
namespace {

// Stride of player i's coordinate in the row-major profile index.
std::size_t stride_of(const BayesianGame& game, PlayerIndex i) {
  std::size_t stride = 1;
  for (PlayerIndex k = game.space().player_count(); k-- > i + 1;) {
    stride *= game.actions(k).size();
  }
  return stride;
}

}  // namespace

BayesianGame::BayesianGame(Parts parts) : parts_(std::move(parts)) {
  for (const auto& a : parts_.actions) profile_count_ *= a.size();
}

BayesianGame BayesianGame::make(Parts parts) {
  const TypeSpace& ts = parts.space;
  if (parts.actions.size() != ts.player_count()) {
    throw Error(ErrorCode::InvalidGame, "expected one action list per player");
  }
  for (PlayerIndex i = 0; i < parts.actions.size(); ++i) {
    const auto& list = parts.actions[i];
    if (list.empty()) {
      throw Error(ErrorCode::InvalidGame,
                  "player \"" + ts.players()[i] + "\" has no actions");
    }
    std::set<std::string> seen;
    for (const auto& a : list) {
      if (a.empty() || a.find(',') != std::string::npos) {
        throw Error(ErrorCode::InvalidGame,
                    "action labels must be nonempty and comma-free");
      }
      if (!seen.insert(a).second) {
        throw Error(ErrorCode::InvalidGame, "action \"" + a + "\" listed twice");
      }
    }
  }
  BayesianGame game(std::move(parts));
  const std::size_t expected =
      game.space().parameters().size() * game.profile_count();
  if (game.parts_.payoffs.size() != expected) {
    throw Error(ErrorCode::InvalidGame,
                "payoff table has " + std::to_string(game.parts_.payoffs.size()) +
                    " slots, expected " + std::to_string(expected));
  }
  for (const auto& entry : game.parts_.payoffs) {
    if (entry && entry->size() != game.space().player_count()) {
      throw Error(ErrorCode::InvalidGame,
                  "payoff vector length differs from the player count");
    }
  }
  return game;
}

ActionIndex BayesianGame::action_index(PlayerIndex i,
                                       std::string_view label) const {
  const auto& list = actions(i);
  auto it = std::find(list.begin(), list.end(), label);
  if (it == list.end()) {
    throw Error(ErrorCode::InvalidGame,
                "no action \"" + std::string(label) + "\" for player \"" +
                    space().players()[i] + "\"");
  }
  return static_cast<ActionIndex>(it - list.begin());
}

std::size_t BayesianGame::profile_index(
    std::span<const ActionIndex> profile) const {
  std::size_t index = 0;
  for (PlayerIndex i = 0; i < profile.size(); ++i) {
    index = index * actions(i).size() + profile[i];
  }
  return index;
}

std::vector<ActionIndex> BayesianGame::profile_of(std::size_t index) const {
  std::vector<ActionIndex> out(parts_.actions.size());
  for (PlayerIndex i = out.size(); i-- > 0;) {
    out[i] = index % actions(i).size();
    index /= actions(i).size();
  }
  return out;
}

std::string BayesianGame::profile_label(std::size_t index) const {
  const auto profile = profile_of(index);
  std::string out;
  for (PlayerIndex i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += actions(i)[profile[i]];
  }
  return out;
}

const Rational& BayesianGame::payoff(PlayerIndex i, PointIndex parameter,
                                     std::size_t profile) const {
  const auto& entry = payoff_entry(parameter, profile);
  if (!entry) {
    throw Error(ErrorCode::InvalidGame,
                "missing payoff at (" + space().parameters().label(parameter) +
                    ", " + profile_label(profile) + ")");
  }
  return entry->at(i);
}

ValidationReport validate_game(const BayesianGame& game) {
  ValidationReport report = validate_type_space(game.space());
  const FiniteMeasurableSpace& params = game.space().parameters();
  for (PointIndex s = 0; s < params.size(); ++s) {
    for (std::size_t p = 0; p < game.profile_count(); ++p) {
      if (!game.payoff_entry(s, p)) {
        report.violations.push_back(
            {"missing-payoff", "payoff missing for (" + params.label(s) + ", " +
                                   game.profile_label(p) + ")"});
      }
    }
  }
  for (const PointSet& atom : params.field().atoms()) {
    for (std::size_t p = 0; p < game.profile_count(); ++p) {
      const auto& first = game.payoff_entry(atom.front(), p);
      for (PointIndex s : atom) {
        const auto& other = game.payoff_entry(s, p);
        if (first && other && *first != *other) {
          report.violations.push_back(
              {"payoff-not-measurable",
               "payoff at (" + params.label(s) + ", " + game.profile_label(p) +
                   ") differs from (" + params.label(atom.front()) +
                   ", ...) in the same atom: not S-measurable"});
        }
      }
    }
  }
  return report;
}

std::vector<std::size_t> opponent_profiles(const BayesianGame& game,
                                           const SurvivorTable& survivors,
                                           PlayerIndex i, AtomIndex atom) {
  const TypeSpace& ts = game.space();
  // Every opponent's field is coarser than M_{-i}, so the atom fixes each
  // opponent's type.
  const PointIndex rep = ts.minus_field(i).atom(atom).front();
  std::vector<std::size_t> profiles{0};
  for (PlayerIndex j = 0; j < ts.player_count(); ++j) {
    if (j == i) continue;
    const std::size_t stride = stride_of(game, j);
    const ActionSet& allowed = survivors.at(j).at(ts.type_of(j, rep));
    std::vector<std::size_t> next;
    next.reserve(profiles.size() * allowed.size());
    for (std::size_t base : profiles) {
      for (ActionIndex a : allowed) next.push_back(base + a * stride);
    }
    profiles = std::move(next);
  }
  std::sort(profiles.begin(), profiles.end());
  return profiles;
}

Rational expected_payoff(const BayesianGame& game, PlayerIndex i,
                         AtomIndex type, ActionIndex action,
                         const Conjecture& conjecture) {
  const TypeSpace& ts = game.space();
  const FiniteMeasure& belief = ts.belief(i, type);
  const std::size_t own = action * stride_of(game, i);
  Rational total = 0;
  for (const auto& [atom, dist] : conjecture.by_atom) {
    const PointIndex s = ts.nature_of(ts.minus_field(i).atom(atom).front());
    for (const auto& [profile, prob] : dist) {
      total += belief.weight(atom) * prob * game.payoff(i, s, profile + own);
    }
  }
  return total;
}

std::optional<Conjecture> supporting_conjecture(const BayesianGame& game,
                                                const SurvivorTable& survivors,
                                                PlayerIndex i, AtomIndex type,
                                                ActionIndex action) {
  const TypeSpace& ts = game.space();
  const FiniteMeasure& belief = ts.belief(i, type);
  const std::size_t n_actions = game.actions(i).size();
  const std::size_t stride = stride_of(game, i);

  struct Column {
    AtomIndex atom;
    std::size_t profile;
  };
  std::vector<Column> columns;
  std::vector<AtomIndex> atoms = belief.support();
  std::vector<std::pair<std::size_t, std::size_t>> atom_ranges;
  for (AtomIndex a : atoms) {
    const auto profiles = opponent_profiles(game, survivors, i, a);
    atom_ranges.emplace_back(columns.size(), columns.size() + profiles.size());
    for (std::size_t p : profiles) columns.push_back({a, p});
  }
  const std::size_t n_vars = columns.size() + (n_actions - 1);

  // One normalization row per atom, one best-reply row per rival action:
  //   sum_{a,p} mu(a) x_{a,p} (u(action) - u(rival)) - slack = 0.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& [begin, end] : atom_ranges) {
    std::vector<Rational> row(n_vars, Rational(0));
    for (std::size_t c = begin; c < end; ++c) row[c] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  std::size_t slack = columns.size();
  for (ActionIndex rival = 0; rival < n_actions; ++rival) {
    if (rival == action) continue;
    std::vector<Rational> row(n_vars, Rational(0));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const PointIndex s =
          ts.nature_of(ts.minus_field(i).atom(columns[c].atom).front());
      row[c] = belief.weight(columns[c].atom) *
               (game.payoff(i, s, columns[c].profile + action * stride) -
                game.payoff(i, s, columns[c].profile + rival * stride));
    }
    row[slack++] = -1;
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }

  const auto solution = feasible_point(rows, rhs);
  if (!solution) return std::nullopt;
  Conjecture conjecture;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    auto& dist = conjecture.by_atom[atoms[k]];
    for (std::size_t c = atom_ranges[k].first; c < atom_ranges[k].second; ++c) {
      if ((*solution)[c] != 0) dist.emplace_back(columns[c].profile, (*solution)[c]);
    }
  }
  return conjecture;
}

RationalizabilityResult interim_rationalizable(const BayesianGame& game) {
  const ValidationReport report = validate_game(game);
  if (!report.ok()) {
    throw Error(ErrorCode::InvalidGame, report.violations.front().message);
  }
  const TypeSpace& ts = game.space();
  SurvivorTable current(ts.player_count());
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    ActionSet all(game.actions(i).size());
    for (ActionIndex a = 0; a < all.size(); ++a) all[a] = a;
    current[i].assign(ts.type_count(i), all);
  }

  RationalizabilityResult result;
  // Simultaneous elimination: every check in a round reads `current`.
  for (;;) {
    SurvivorTable next(ts.player_count());
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      next[i].resize(ts.type_count(i));
      for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
        for (ActionIndex a : current[i][t]) {
          if (supporting_conjecture(game, current, i, t, a)) {
            next[i][t].push_back(a);
          }
        }
      }
    }
    result.rounds.push_back(current);
    if (next == current) break;
    current = std::move(next);
  }
  result.fixpoint_round = result.rounds.size() - 1;
  return result;
}

std::vector<ActionSet> rationalizable_actions(const BayesianGame& game) {
  const RationalizabilityResult r = interim_rationalizable(game);
  const TypeSpace& ts = game.space();
  std::vector<ActionSet> out(ts.player_count());
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    std::set<ActionIndex> any;
    for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
      any.insert(r.survivors(i, t).begin(), r.survivors(i, t).end());
    }
    out[i].assign(any.begin(), any.end());
  }
  return out;
}

BayesianGame transport(const BayesianGame& game, const TypeSpace& space) {
  if (!(space.parameters() == game.space().parameters())) {
    throw Error(ErrorCode::ParameterSpaceMismatch,
                "target space uses a different parameter space");
  }
  if (space.players() != game.space().players()) {
    throw Error(ErrorCode::ParameterSpaceMismatch,
                "target space has a different player set");
  }
  BayesianGame::Parts parts = game.parts();
  parts.space = space;
  return BayesianGame::make(std::move(parts));
}

}  // namespace tspace
