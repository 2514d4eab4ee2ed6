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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "check.hpp"
#include "fixtures.hpp"
#include "tspace/game.hpp"
#include "tspace/hierarchy.hpp"

using namespace tspace;
namespace fx = tspace::testing;

namespace {

ActionSet actions(const BayesianGame& g, PlayerIndex i,
                  std::initializer_list<const char*> labels) {
  ActionSet out;
  for (const char* l : labels) out.push_back(g.action_index(i, l));
  std::sort(out.begin(), out.end());
  return out;
}

// One state and one parameter; player 1 picks T, M or B, player 2 is
// indifferent between L and R.
BayesianGame one_shot(const std::vector<std::vector<Rational>>& rows) {
  TypeSpace::Parts parts;
  parts.parameters = FiniteMeasurableSpace::discrete({"s"});
  parts.players = {"1", "2"};
  parts.states = {"w"};
  parts.nature_field = Partition::trivial(1);
  parts.player_fields = {Partition::trivial(1), Partition::trivial(1)};
  parts.nature_map = {0};
  const TypeSpace ts = TypeSpace::make(parts, {{{1}}, {{1}}});
  BayesianGame::Parts g{ts, {{"T", "M", "B"}, {"L", "R"}}, {}};
  for (const auto& row : rows) {
    for (const Rational& v : row) g.payoffs.push_back(std::vector<Rational>{v, 0});
  }
  return BayesianGame::make(std::move(g));
}

bool has_violation(const ValidationReport& report, const std::string& kind,
                   const std::string& text = "") {
  for (const Violation& v : report.violations) {
    if (v.kind == kind && v.message.find(text) != std::string::npos) return true;
  }
  return false;
}

bool valid_certificate(const BayesianGame& game, const SurvivorTable& survivors,
                       PlayerIndex i, AtomIndex t, ActionIndex a, const Conjecture& c) {
  const FiniteMeasure& belief = game.space().belief(i, t);
  for (AtomIndex b : belief.support()) {
    auto it = c.by_atom.find(b);
    if (it == c.by_atom.end()) return false;
    const auto allowed = opponent_profiles(game, survivors, i, b);
    Rational total = 0;
    for (const auto& [profile, p] : it->second) {
      if (p < 0 || !std::binary_search(allowed.begin(), allowed.end(), profile)) {
        return false;
      }
      total += p;
    }
    if (total != 1) return false;
  }
  const Rational mine = expected_payoff(game, i, t, a, c);
  for (ActionIndex other = 0; other < game.actions(i).size(); ++other) {
    if (expected_payoff(game, i, t, other, c) > mine) return false;
  }
  return true;
}

// Visits every conjecture whose weights are multiples of 1/grid; returns
// false without visiting when there are more than `cap` of them.
bool for_each_grid_conjecture(const BayesianGame& game, const SurvivorTable& survivors,
                              PlayerIndex i, AtomIndex t, int grid, std::size_t cap,
                              const std::function<void(const Conjecture&)>& visit) {
  using Dist = std::vector<std::pair<std::size_t, Rational>>;
  const auto atoms = game.space().belief(i, t).support();
  std::vector<std::vector<Dist>> options;
  std::size_t count = 1;
  for (AtomIndex b : atoms) {
    const auto allowed = opponent_profiles(game, survivors, i, b);
    std::vector<Dist> dists;
    std::vector<int> units(allowed.size(), 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
      if (k + 1 == allowed.size()) {
        units[k] = left;
        Dist d;
        for (std::size_t j = 0; j < allowed.size(); ++j) {
          if (units[j]) d.emplace_back(allowed[j], Rational(units[j], grid));
        }
        dists.push_back(std::move(d));
        return;
      }
      for (int u = 0; u <= left; ++u) {
        units[k] = u;
        fill(k + 1, left - u);
      }
    };
    fill(0, grid);
    count *= dists.size();
    if (count > cap) return false;
    options.push_back(std::move(dists));
  }
  std::vector<std::size_t> pick(atoms.size(), 0);
  while (true) {
    Conjecture c;
    for (std::size_t k = 0; k < atoms.size(); ++k) c.by_atom[atoms[k]] = options[k][pick[k]];
    visit(c);
    std::size_t k = atoms.size();
    while (k-- > 0) {
      if (++pick[k] < options[k].size()) break;
      pick[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) return true;
  }
}

}  // namespace

TEST_CASE("payoff tables are validated") {
  const BayesianGame game = fx::paper_game(fx::case1());
  CHECK(validate_game(game).ok());
  CHECK(game.profile_label(game.profile_index(std::vector<ActionIndex>{1, 0})) == "D,L");

  // (s1, D, R) has no entry.
  BayesianGame::Parts parts = game.parts();
  const std::size_t dr = game.profile_index(std::vector<ActionIndex>{1, 1});
  parts.payoffs[0 * game.profile_count() + dr].reset();
  const BayesianGame missing = BayesianGame::make(parts);
  CHECK(has_violation(validate_game(missing), "missing-payoff", "s1"));
  CHECK_ERROR(interim_rationalizable(missing), ErrorCode::InvalidGame);

  // s1 and s2 share an atom but not a payoff.
  TypeSpace::Parts coarse = fx::case2().parts();
  coarse.parameters = FiniteMeasurableSpace::make({"s1", "s2"},
                                                  std::vector<std::vector<std::string>>{{"s1", "s2"}});
  const TypeSpace blurred = TypeSpace::make(coarse, {{{1}}, {{1}}});
  const BayesianGame varying = fx::paper_game(blurred);
  CHECK(has_violation(validate_game(varying), "payoff-not-measurable", "not S-measurable"));

  BayesianGame::Parts dup = game.parts();
  dup.actions[0] = {"U", "U"};
  CHECK_ERROR(BayesianGame::make(dup), ErrorCode::InvalidGame);
  CHECK_ERROR(game.action_index(0, "X"), ErrorCode::InvalidGame);
}

TEST_CASE("the first example: R is not rationalizable for player 2") {
  const BayesianGame game = fx::paper_game(fx::case1());
  const auto result = interim_rationalizable(game);
  for (AtomIndex t = 0; t < 2; ++t) {
    CHECK(result.survivors(0, t) == actions(game, 0, {"D"}));
    CHECK(result.survivors(1, t) == actions(game, 1, {"L"}));
  }
  const auto overall = rationalizable_actions(game);
  CHECK(overall[0] == actions(game, 0, {"D"}));
  CHECK(overall[1] == actions(game, 1, {"L"}));
}

TEST_CASE("the second example: U is not rationalizable for player 1") {
  const BayesianGame game = fx::paper_game(fx::case2());
  const auto overall = rationalizable_actions(game);
  CHECK(overall[0] == actions(game, 0, {"D"}));
  CHECK(overall[1] == actions(game, 1, {"L"}));
}

TEST_CASE("the finite stand-in for the third example") {
  const TypeSpace ts = fx::case3f();
  const BayesianGame game = fx::paper_game(ts);
  const auto result = interim_rationalizable(game);
  const AtomIndex p1_type1 = ts.type_of(0, ts.state_index("s1_1_0"));
  const AtomIndex p1_type0 = ts.type_of(0, ts.state_index("s1_0_0"));
  const AtomIndex p2_type1 = ts.type_of(1, ts.state_index("s1_0_1"));
  const AtomIndex p2_type0 = ts.type_of(1, ts.state_index("s1_0_0"));
  CHECK(result.survivors(0, p1_type1) == actions(game, 0, {"D"}));
  CHECK(result.survivors(0, p1_type0) == actions(game, 0, {"U"}));
  CHECK(result.survivors(1, p2_type1) == actions(game, 1, {"R"}));
  CHECK(result.survivors(1, p2_type0) == actions(game, 1, {"L"}));
  const auto overall = rationalizable_actions(game);
  CHECK(overall[0] == actions(game, 0, {"U", "D"}));
  CHECK(overall[1] == actions(game, 1, {"L", "R"}));
}

TEST_CASE("best replies to mixed conjectures survive") {
  // M is best only against the even mix of L and R.
  const BayesianGame mixed = one_shot({{3, 0}, {2, 2}, {0, 3}});
  CHECK(interim_rationalizable(mixed).survivors(0, 0) == actions(mixed, 0, {"T", "M", "B"}));
  // Here the even mix of T and B beats M everywhere.
  const BayesianGame dominated = one_shot({{3, 0}, {1, 1}, {0, 3}});
  CHECK(interim_rationalizable(dominated).survivors(0, 0) == actions(dominated, 0, {"T", "B"}));
}

TEST_CASE("elimination is monotone and reaches its fixpoint") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 150; ++round) {
    const TypeSpace ts = fx::random_type_space(rng);
    const BayesianGame game = fx::random_game(rng, ts);
    const auto result = interim_rationalizable(game);
    REQUIRE(!result.rounds.empty());
    std::size_t slack = 1;
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      slack += ts.type_count(i) * (game.actions(i).size() - 1);
    }
    CHECK(result.rounds.size() <= slack + 1);
    CHECK(result.fixpoint_round + 1 == result.rounds.size());
    for (std::size_t k = 0; k < result.rounds.size(); ++k) {
      for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
        for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
          const ActionSet& now = result.rounds[k][i][t];
          CHECK_FALSE(now.empty());
          if (k == 0) {
            CHECK(now.size() == game.actions(i).size());
          } else {
            CHECK(std::includes(result.rounds[k - 1][i][t].begin(),
                                result.rounds[k - 1][i][t].end(), now.begin(), now.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("survivors carry certificates and eliminated actions have none on a grid") {
  std::mt19937_64 rng(89);
  int refuted = 0;
  for (int round = 0; round < 150; ++round) {
    fx::RandomSpaceOptions options;
    options.max_states = 4;
    const TypeSpace ts = fx::random_type_space(rng, options);
    const BayesianGame game = fx::random_game(rng, ts, 3);
    const auto result = interim_rationalizable(game);
    for (std::size_t k = 0; k + 1 < result.rounds.size(); ++k) {
      const SurvivorTable& before = result.rounds[k];
      for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
        for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
          const ActionSet& kept = result.rounds[k + 1][i][t];
          for (ActionIndex a : before[i][t]) {
            const auto c = supporting_conjecture(game, before, i, t, a);
            const bool survives = std::binary_search(kept.begin(), kept.end(), a);
            CHECK(c.has_value() == survives);
            if (c) {
              CHECK(valid_certificate(game, before, i, t, a, *c));
              continue;
            }
            bool supported = false;
            if (for_each_grid_conjecture(game, before, i, t, 6, 20000,
                                         [&](const Conjecture& g) {
                                           supported |= valid_certificate(game, before, i, t, a, g);
                                         })) {
              ++refuted;
              CHECK_FALSE(supported);
            }
          }
        }
      }
    }
  }
  CHECK(refuted > 50);
}

TEST_CASE("strictly dominated actions never survive the first round") {
  std::mt19937_64 rng(97);
  int dominated = 0;
  for (int round = 0; round < 200; ++round) {
    const TypeSpace ts = fx::random_type_space(rng);
    const BayesianGame game = fx::random_game(rng, ts);
    const auto result = interim_rationalizable(game);
    const std::size_t rounds = result.rounds.size();
    const SurvivorTable& first = result.rounds[std::min<std::size_t>(1, rounds - 1)];
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      const std::size_t stride = game.profile_count() / [&] {
        std::size_t p = 1;
        for (PlayerIndex j = 0; j <= i; ++j) p *= game.actions(j).size();
        return p;
      }();
      for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
        std::set<PointIndex> params;
        const FiniteMeasure& belief = ts.belief(i, t);
        for (AtomIndex b : belief.support()) {
          params.insert(ts.nature_of(ts.minus_field(i).atom(b).front()));
        }
        for (ActionIndex a = 0; a < game.actions(i).size(); ++a) {
          for (ActionIndex b = 0; b < game.actions(i).size(); ++b) {
            bool strictly = a != b;
            for (std::size_t p = 0; p < game.profile_count() && strictly; ++p) {
              if (game.profile_of(p)[i] != a) continue;
              const std::size_t q = p + (b * stride) - (a * stride);
              for (PointIndex s : params) {
                strictly &= game.payoff(i, s, q) > game.payoff(i, s, p);
              }
            }
            if (strictly) {
              ++dominated;
              CHECK_FALSE(std::binary_search(first[i][t].begin(), first[i][t].end(), a));
            }
          }
        }
      }
    }
  }
  CHECK(dominated > 20);
}

TEST_CASE("rationalizability only sees hierarchies") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 150; ++round) {
    const TypeSpace ts = fx::random_type_space(rng);
    const BayesianGame game = fx::random_game(rng, ts);
    const QuotientResult q = quotient(ts);
    const BayesianGame moved = transport(game, q.quotient);
    CHECK(rationalizable_actions(game) == rationalizable_actions(moved));
    const auto here = interim_rationalizable(game);
    const auto there = interim_rationalizable(moved);
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      for (PointIndex w = 0; w < ts.state_count(); ++w) {
        CHECK(here.survivors(i, ts.type_of(i, w)) ==
              there.survivors(i, q.quotient.type_of(i, q.projection(w))));
      }
    }
  }
  for (const TypeSpace& ts : {fx::case1(), fx::case2(), fx::case3f()}) {
    const BayesianGame game = fx::paper_game(ts);
    CHECK(rationalizable_actions(game) ==
          rationalizable_actions(transport(game, quotient(ts).quotient)));
  }
  TypeSpace::Parts other = fx::case2().parts();
  other.parameters = FiniteMeasurableSpace::discrete({"s1", "s3"});
  CHECK_ERROR(transport(fx::paper_game(fx::case1()), TypeSpace::make(other, {{{1}}, {{1}}})),
              ErrorCode::ParameterSpaceMismatch);
}
