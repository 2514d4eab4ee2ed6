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

// Bayesian games on finite type spaces and interim correlated
// rationalizability.

#ifndef TSPACE_GAME_HPP_
#define TSPACE_GAME_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspace/type_space.hpp"

namespace tspace {

using ActionIndex = std::size_t;
using ActionSet = std::vector<ActionIndex>;  // sorted

class BayesianGame {
 public:
  struct Parts {
    TypeSpace space;
    std::vector<std::vector<std::string>> actions;  // parallel to players
    // Indexed by parameter point * profile_count() + profile index; one
    // payoff per player. A missing entry is representable so that
    // validate_game can report it.
    std::vector<std::optional<std::vector<Rational>>> payoffs;
  };

  // Structural checks. Throws InvalidGame.
  static BayesianGame make(Parts parts);

  const TypeSpace& space() const { return parts_.space; }
  const std::vector<std::string>& actions(PlayerIndex i) const {
    return parts_.actions.at(i);
  }
  // Throws InvalidGame.
  ActionIndex action_index(PlayerIndex i, std::string_view label) const;

  // Profiles are row-major over players in player order.
  std::size_t profile_count() const { return profile_count_; }
  std::size_t profile_index(std::span<const ActionIndex> profile) const;
  std::vector<ActionIndex> profile_of(std::size_t index) const;
  // Comma-joined action labels, e.g. "U,L".
  std::string profile_label(std::size_t index) const;

  const std::optional<std::vector<Rational>>& payoff_entry(
      PointIndex parameter, std::size_t profile) const {
    return parts_.payoffs.at(parameter * profile_count_ + profile);
  }
  // Throws InvalidGame when the entry is missing.
  const Rational& payoff(PlayerIndex i, PointIndex parameter,
                         std::size_t profile) const;

  const Parts& parts() const { return parts_; }

 private:
  explicit BayesianGame(Parts parts);

  Parts parts_;
  std::size_t profile_count_ = 1;
};

// Underlying type space validity, payoff table totality, and constancy of
// payoffs on parameter atoms.
ValidationReport validate_game(const BayesianGame& game);

// Survivors per (player, type) for one elimination round.
using SurvivorTable = std::vector<std::vector<ActionSet>>;

struct RationalizabilityResult {
  // rounds[0] keeps every action; rounds.back() is the fixpoint.
  std::vector<SurvivorTable> rounds;
  // Index of the first round equal to its successor.
  std::size_t fixpoint_round = 0;

  const ActionSet& survivors(PlayerIndex i, AtomIndex type) const {
    return rounds.back().at(i).at(type);
  }
};

// A conjecture of one type: for every atom of M_{-i} the type puts positive
// mass on, a distribution over opponent profiles (indices from
// opponent_profiles()).
struct Conjecture {
  std::map<AtomIndex, std::vector<std::pair<std::size_t, Rational>>> by_atom;
};

// Joint opponent action profiles allowed at `atom` of M_{-i} under the
// given survivor table, as full-profile templates with player i's slot set
// to 0.
std::vector<std::size_t> opponent_profiles(const BayesianGame& game,
                                           const SurvivorTable& survivors,
                                           PlayerIndex i, AtomIndex atom);

Rational expected_payoff(const BayesianGame& game, PlayerIndex i,
                         AtomIndex type, ActionIndex action,
                         const Conjecture& conjecture);

// A conjecture, consistent with the type's belief and the opponents'
// surviving actions, to which `action` is a best reply; nullopt when none
// exists. Solved exactly as a linear feasibility problem.
std::optional<Conjecture> supporting_conjecture(const BayesianGame& game,
                                                const SurvivorTable& survivors,
                                                PlayerIndex i, AtomIndex type,
                                                ActionIndex action);

// Throws InvalidGame.
RationalizabilityResult interim_rationalizable(const BayesianGame& game);

// Actions surviving at some type of the player, per player.
std::vector<ActionSet> rationalizable_actions(const BayesianGame& game);

// Same actions and payoffs on another space over the same parameters.
BayesianGame transport(const BayesianGame& game, const TypeSpace& space);

}  // namespace tspace

#endif  // TSPACE_GAME_HPP_
