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

#include "tspace/type_space.hpp"

#include <algorithm>
#include <set>

#include "tspace/error.hpp"

namespace tspace {
namespace {

std::string describe(const FiniteMeasurableSpace& space, const PointSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    out += (k ? "," : "") + space.label(set[k]);
  }
  return out + "}";
}

Partition compute_minus_field(const Partition& nature,
                              const std::vector<Partition>& players,
                              PlayerIndex i) {
  std::vector<Partition> parts{nature};
  for (PlayerIndex j = 0; j < players.size(); ++j) {
    if (j != i) parts.push_back(players[j]);
  }
  return sigma_join(parts);
}

void check_structure(const TypeSpace::Parts& p) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::InvalidTypeSpace, msg);
  };
  if (p.players.empty()) fail("no players");
  std::set<std::string> seen;
  for (const auto& id : p.players) {
    if (id.empty()) fail("empty player id");
    if (id == kNature) fail("player id \"0\" is reserved for nature");
    if (!seen.insert(id).second) fail("player \"" + id + "\" listed twice");
  }
  const std::size_t n = p.states.size();
  if (n == 0) fail("no states of the world");
  if (p.parameters.size() == 0) fail("empty parameter space");
  if (p.nature_field.carrier_size() != n) fail("nature field has wrong carrier");
  if (p.player_fields.size() != p.players.size()) {
    fail("expected one field per player");
  }
  for (std::size_t i = 0; i < p.player_fields.size(); ++i) {
    if (p.player_fields[i].carrier_size() != n) {
      fail("field of player \"" + p.players[i] + "\" has wrong carrier");
    }
  }
  if (p.nature_map.size() != n) fail("g must assign every state");
  for (PointIndex s : p.nature_map) {
    if (s >= p.parameters.size()) fail("g leaves the parameter space");
  }
}

}  // namespace

TypeSpace TypeSpace::make(Parts parts) {
  check_structure(parts);
  auto d = std::make_shared<Data>();
  std::vector<Partition> all{parts.nature_field};
  all.insert(all.end(), parts.player_fields.begin(), parts.player_fields.end());
  d->world = FiniteMeasurableSpace::make(parts.states, sigma_join(all));
  for (PlayerIndex i = 0; i < parts.players.size(); ++i) {
    d->minus_fields.push_back(
        compute_minus_field(parts.nature_field, parts.player_fields, i));
    d->uncertainty.push_back(d->world.with_field(d->minus_fields.back()));
  }
  if (parts.beliefs.size() != parts.players.size()) {
    throw Error(ErrorCode::InvalidTypeSpace, "expected beliefs for every player");
  }
  for (PlayerIndex i = 0; i < parts.players.size(); ++i) {
    if (parts.beliefs[i].size() != parts.player_fields[i].atom_count()) {
      throw Error(ErrorCode::InvalidTypeSpace,
                  "player \"" + parts.players[i] + "\" has " +
                      std::to_string(parts.beliefs[i].size()) +
                      " beliefs for " +
                      std::to_string(parts.player_fields[i].atom_count()) +
                      " types");
    }
    for (const FiniteMeasure& mu : parts.beliefs[i]) {
      if (!mu.base().same_carrier(d->world)) {
        throw Error(ErrorCode::InvalidTypeSpace,
                    "a belief of player \"" + parts.players[i] +
                        "\" is not over the states of the world");
      }
    }
  }
  d->parts = std::move(parts);
  return TypeSpace(std::move(d));
}

TypeSpace TypeSpace::make(
    Parts parts,
    const std::vector<std::vector<std::vector<Rational>>>& belief_weights) {
  check_structure(parts);
  std::vector<Partition> all{parts.nature_field};
  all.insert(all.end(), parts.player_fields.begin(), parts.player_fields.end());
  const auto world = FiniteMeasurableSpace::make(parts.states, sigma_join(all));
  if (belief_weights.size() != parts.players.size()) {
    throw Error(ErrorCode::InvalidTypeSpace, "expected beliefs for every player");
  }
  parts.beliefs.assign(parts.players.size(), {});
  for (PlayerIndex i = 0; i < parts.players.size(); ++i) {
    const auto base = world.with_field(
        compute_minus_field(parts.nature_field, parts.player_fields, i));
    for (const auto& row : belief_weights[i]) {
      if (row.size() != base.field().atom_count()) {
        throw Error(ErrorCode::InvalidTypeSpace,
                    "belief row of player \"" + parts.players[i] + "\" has " +
                        std::to_string(row.size()) + " entries for " +
                        std::to_string(base.field().atom_count()) + " atoms");
      }
      parts.beliefs[i].push_back(FiniteMeasure::unchecked(base, row));
    }
  }
  return make(std::move(parts));
}

PlayerIndex TypeSpace::player_index(std::string_view id) const {
  const auto& ps = players();
  auto it = std::find(ps.begin(), ps.end(), id);
  if (it == ps.end()) {
    throw Error(ErrorCode::UnknownPlayer,
                "no player \"" + std::string(id) + "\"");
  }
  return static_cast<PlayerIndex>(it - ps.begin());
}

PointIndex TypeSpace::state_index(std::string_view label) const {
  if (auto x = world().find(label)) return *x;
  throw Error(ErrorCode::UnknownState,
              "no state \"" + std::string(label) + "\"");
}

const Partition& TypeSpace::field(PlayerIndex i) const {
  if (i >= player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return d_->parts.player_fields[i];
}

const Partition& TypeSpace::minus_field(PlayerIndex i) const {
  if (i >= player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return d_->minus_fields[i];
}

const FiniteMeasurableSpace& TypeSpace::uncertainty_space(PlayerIndex i) const {
  if (i >= player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return d_->uncertainty[i];
}

MeasurableMap TypeSpace::nature_map() const {
  return MeasurableMap::make(world().with_field(nature_field()), parameters(),
                             d_->parts.nature_map);
}

const FiniteMeasure& TypeSpace::belief(PlayerIndex i, AtomIndex type) const {
  if (i >= player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return d_->parts.beliefs[i].at(type);
}

Partition minus_i_field(const TypeSpace& ts, std::string_view player) {
  return ts.minus_field(ts.player_index(player));
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_type_space(const TypeSpace& ts) {
  ValidationReport report;
  const MeasurabilityCheck g_check =
      is_measurable(ts.nature_map(), ts.nature_field(), ts.parameters().field());
  if (!g_check.measurable) {
    report.violations.push_back(
        {"nature-map-not-measurable",
         "g^-1(" + describe(ts.parameters(), g_check.witness) + ") = " +
             describe(ts.world(), g_check.preimage) +
             " is not measurable in the nature field"});
  }
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    const std::string& id = ts.players()[i];
    for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
      const FiniteMeasure& mu = ts.belief(i, t);
      const std::string where = "belief of player \"" + id + "\" at type " +
                                describe(ts.world(), ts.field(i).atom(t));
      if (!(mu.base().field() == ts.minus_field(i))) {
        report.violations.push_back(
            {"belief-base-field-mismatch",
             where + ": belief base field mismatch (expected M_{-" + id + "})"});
        continue;
      }
      for (const Rational& w : mu.weights()) {
        if (w < 0) {
          report.violations.push_back(
              {"negative-weight", where + ": negative weight " + to_string(w)});
          break;
        }
      }
      if (mu.total() != 1) {
        report.violations.push_back(
            {"weights-not-normalized",
             where + ": weights sum to " + to_string(mu.total())});
      }
    }
  }
  return report;
}

void require_valid(const TypeSpace& ts) {
  const ValidationReport report = validate_type_space(ts);
  if (!report.ok()) {
    throw Error(ErrorCode::InvalidTypeSpace, report.violations.front().message);
  }
}

// ---------------------------------------------------------------------------
// Completeness

bool CompletenessVerdict::complete() const {
  return std::all_of(players.begin(), players.end(),
                     [](const PlayerCompleteness& p) { return p.complete; });
}

CompletenessVerdict check_completeness(const TypeSpace& ts) {
  require_valid(ts);
  CompletenessVerdict verdict;
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    PlayerCompleteness entry;
    entry.player = i;
    const std::size_t k = ts.minus_field(i).atom_count();
    if (k == 1) {
      // Delta over a one-atom field is the single measure (1); every type
      // attains it.
      entry.complete = true;
      verdict.players.push_back(std::move(entry));
      continue;
    }
    std::set<std::vector<Rational>> attained;
    for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
      attained.insert(ts.belief(i, t).weights());
    }
    // Candidates m/(m+1) on atom 0 and 1/(m+1) on atom 1 are pairwise
    // distinct, so one of the first |attained|+1 is unattained.
    for (unsigned m = 1;; ++m) {
      std::vector<Rational> w(k, Rational(0));
      w[0] = Rational(m, m + 1);
      w[1] = Rational(1, m + 1);
      if (!attained.contains(w)) {
        entry.witness = FiniteMeasure::make(ts.uncertainty_space(i), std::move(w));
        break;
      }
    }
    verdict.players.push_back(std::move(entry));
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Belief operators

namespace {

void require_event(const TypeSpace& ts, PlayerIndex i, const PointSet& event,
                   const std::string& context) {
  for (PointIndex x : event) {
    if (x >= ts.state_count()) {
      throw Error(ErrorCode::UnknownState, "event leaves the carrier");
    }
  }
  if (auto fragment = ts.minus_field(i).cut_fragment(event)) {
    throw Error(ErrorCode::EventNotMeasurable,
                "event " + describe(ts.world(), event) +
                    " is not measurable for player \"" + ts.players()[i] +
                    "\"" + context + " (cuts " +
                    describe(ts.world(), *fragment) + ")");
  }
}

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) {
    throw Error(ErrorCode::BadProbability,
                "threshold " + to_string(p) + " outside [0,1]");
  }
}

PointSet mutual_belief_at(const TypeSpace& ts, const PointSet& event,
                          const Rational& p, const std::string& context) {
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    require_event(ts, i, event, context);
  }
  PointSet result = full_set(ts.state_count());
  for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
    result = set_intersection(result, belief_operator(ts, i, event, p));
  }
  return result;
}

}  // namespace

PointSet belief_operator(const TypeSpace& ts, PlayerIndex i,
                         const PointSet& event, const Rational& p) {
  require_probability(p);
  require_event(ts, i, event, "");
  PointSet result;
  for (PointIndex w = 0; w < ts.state_count(); ++w) {
    if (measure_of(ts.belief_at(i, w), event) >= p) result.push_back(w);
  }
  if (!ts.field(i).is_measurable(result)) {
    throw Error(ErrorCode::InternalMeasurabilityFailure,
                "belief event is not a union of the player's types");
  }
  return result;
}

PointSet mutual_belief(const TypeSpace& ts, const PointSet& event,
                       const Rational& p) {
  require_probability(p);
  return mutual_belief_at(ts, event, p, "");
}

PointSet common_belief(const TypeSpace& ts, const PointSet& event,
                       const Rational& p) {
  require_probability(p);
  PointSet current = mutual_belief_at(ts, event, p, "");
  // A strictly decreasing chain of subsets of a finite carrier.
  for (std::size_t k = 0;; ++k) {
    PointSet next = set_intersection(
        current,
        mutual_belief_at(ts, current, p, " at iteration " + std::to_string(k)));
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace tspace
