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

#include "tspace/hierarchy.hpp"

#include <algorithm>

#include "tspace/error.hpp"

namespace tspace {
namespace {

std::vector<std::size_t> axis_extents(const FiniteMeasurableSpace& space) {
  std::vector<std::size_t> extents;
  if (space.is_product()) {
    for (const auto& f : space.factors()) extents.push_back(f.size());
  } else {
    extents.push_back(space.size());
  }
  return extents;
}

std::size_t flatten(std::span<const std::size_t> coords,
                    std::span<const std::size_t> extents) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    index = index * extents[k] + coords[k];
  }
  return index;
}

FiniteMeasurableSpace parameter_axis(const TypeSpace& ts) {
  const auto& params = ts.parameters();
  std::vector<std::string> labels;
  for (AtomIndex a = 0; a < params.field().atom_count(); ++a) {
    labels.push_back(params.atom_label(a));
  }
  return FiniteMeasurableSpace::discrete(std::move(labels));
}

FiniteMeasurableSpace label_axis(const std::string& player, std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t l = 0; l < count; ++l) {
    labels.push_back(player + ":" + std::to_string(l));
  }
  return FiniteMeasurableSpace::discrete(std::move(labels));
}

std::optional<std::size_t> first_stable_depth(const HierarchyTable& table,
                                              std::size_t players) {
  for (std::size_t n = 0; n < table.max_depth(); ++n) {
    bool stable = true;
    for (PlayerIndex i = 0; i < players && stable; ++i) {
      stable = table.partition(i, n).same_atoms(table.partition(i, n + 1));
    }
    if (stable) return n;
  }
  return std::nullopt;
}

}  // namespace

LevelSupport HierarchyLevel::support() const {
  LevelSupport out;
  const auto extents = axis_extents(measure.base());
  for (AtomIndex a = 0; a < measure.weights().size(); ++a) {
    if (measure.weight(a) == 0) continue;
    std::vector<std::size_t> coords(extents.size());
    std::size_t rest = a;
    for (std::size_t k = extents.size(); k-- > 0;) {
      coords[k] = rest % extents[k];
      rest /= extents[k];
    }
    LevelKey key;
    key.parameter_atom = coords[0];
    key.opponent_labels.assign(coords.begin() + 1, coords.end());
    out.emplace(std::move(key), measure.weight(a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LabelInterner

LabelInterner::Slot& LabelInterner::slot(PlayerIndex player, std::size_t depth) {
  return slots_[{player, depth}];
}

const LabelInterner::Slot* LabelInterner::find_slot(PlayerIndex player,
                                                    std::size_t depth) const {
  auto it = slots_.find({player, depth});
  return it == slots_.end() ? nullptr : &it->second;
}

HierarchyLabel LabelInterner::intern(PlayerIndex player, std::size_t depth,
                                     const LevelSupport& support,
                                     HierarchyLabel parent) {
  Slot& s = slot(player, depth);
  auto [it, inserted] = s.ids.try_emplace(support, s.parents.size());
  if (inserted) {
    s.parents.push_back(parent);
  } else if (s.parents[it->second] != parent) {
    throw Error(ErrorCode::InternalMeasurabilityFailure,
                "equal depth-" + std::to_string(depth) +
                    " beliefs truncate to different lower beliefs");
  }
  return it->second;
}

std::size_t LabelInterner::label_count(PlayerIndex player,
                                       std::size_t depth) const {
  if (depth == 0) return 1;
  const Slot* s = find_slot(player, depth);
  return s ? s->parents.size() : 0;
}

HierarchyLabel LabelInterner::parent(PlayerIndex player, std::size_t depth,
                                     HierarchyLabel label) const {
  if (depth == 0) return 0;
  const Slot* s = find_slot(player, depth);
  if (!s || label >= s->parents.size()) {
    throw Error(ErrorCode::BadCoordinate, "unknown hierarchy label");
  }
  return s->parents[label];
}

// ---------------------------------------------------------------------------
// HierarchyTable

HierarchyTable HierarchyTable::build(const TypeSpace& ts, std::size_t max_depth,
                                     std::shared_ptr<LabelInterner> interner) {
  require_valid(ts);
  HierarchyTable table;
  table.max_depth_ = max_depth;
  table.states_ = ts.state_count();
  table.interner_ = interner ? std::move(interner)
                             : std::make_shared<LabelInterner>();
  LabelInterner& names = *table.interner_;

  const std::size_t players = ts.player_count();
  const std::size_t states = ts.state_count();
  table.labels_.assign(players, {});
  table.levels_.assign(players, {});
  for (PlayerIndex i = 0; i < players; ++i) {
    table.labels_[i].push_back(std::vector<HierarchyLabel>(states, 0));
  }
  const FiniteMeasurableSpace s_axis = parameter_axis(ts);

  for (std::size_t n = 1; n <= max_depth; ++n) {
    std::vector<std::vector<HierarchyLevel>> depth_levels(players);
    for (PlayerIndex i = 0; i < players; ++i) {
      std::vector<PlayerIndex> opponents;
      std::vector<FiniteMeasurableSpace> axes{s_axis};
      for (PlayerIndex j = 0; j < players; ++j) {
        if (j == i) continue;
        opponents.push_back(j);
        axes.push_back(label_axis(ts.players()[j], names.label_count(j, n - 1)));
      }
      const FiniteMeasurableSpace target =
          axes.size() == 1 ? axes.front() : product_space(axes);
      const auto extents = axis_extents(target);

      // w' -> (parameter atom, opponents' depth-(n-1) labels).
      std::vector<PointIndex> assignment(states);
      for (PointIndex w = 0; w < states; ++w) {
        std::vector<std::size_t> coords{ts.nature_atom_of(w)};
        for (PlayerIndex j : opponents) {
          coords.push_back(table.labels_[j][n - 1][w]);
        }
        assignment[w] = flatten(coords, extents);
      }
      const MeasurableMap labeling = MeasurableMap::make(
          ts.uncertainty_space(i), target, std::move(assignment));

      std::vector<std::vector<HierarchyLabel>> parents;
      if (n >= 2) {
        for (PlayerIndex j : opponents) {
          std::vector<HierarchyLabel> up(names.label_count(j, n - 1));
          for (HierarchyLabel l = 0; l < up.size(); ++l) {
            up[l] = names.parent(j, n - 1, l);
          }
          parents.push_back(std::move(up));
        }
      }

      // Beliefs are constant on the player's types; push each type once.
      std::vector<std::optional<HierarchyLevel>> by_type(ts.type_count(i));
      std::vector<HierarchyLevel> levels(states);
      for (PointIndex w = 0; w < states; ++w) {
        auto& cached = by_type[ts.type_of(i, w)];
        if (!cached) {
          HierarchyLevel level;
          level.depth = n;
          level.opponents = opponents;
          level.parents = parents;
          try {
            level.measure =
                pushforward(ts.belief_at(i, w), labeling, target.field());
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NotMeasurable) throw;
            throw Error(ErrorCode::InternalMeasurabilityFailure,
                        "depth-" + std::to_string(n) + " labeling of player \"" +
                            ts.players()[i] + "\": " + e.what());
          }
          cached = std::move(level);
        }
        levels[w] = *cached;
      }
      depth_levels[i] = std::move(levels);
    }

    for (PlayerIndex i = 0; i < players; ++i) {
      std::vector<HierarchyLabel> labels(states);
      for (PointIndex w = 0; w < states; ++w) {
        labels[w] = names.intern(i, n, depth_levels[i][w].support(),
                                 table.labels_[i][n - 1][w]);
      }
      table.labels_[i].push_back(std::move(labels));
      table.levels_[i].push_back(std::move(depth_levels[i]));
    }
  }
  return table;
}

HierarchyLabel HierarchyTable::label(PlayerIndex i, std::size_t depth,
                                     PointIndex state) const {
  if (depth > max_depth_) {
    throw Error(ErrorCode::BadCoordinate, "depth beyond the table");
  }
  if (state >= states_) throw Error(ErrorCode::UnknownState, "state out of range");
  return labels_.at(i)[depth][state];
}

const HierarchyLevel& HierarchyTable::level(PlayerIndex i, std::size_t depth,
                                            PointIndex state) const {
  if (depth == 0 || depth > max_depth_) {
    throw Error(ErrorCode::BadCoordinate, "depth must be in 1.." +
                                              std::to_string(max_depth_));
  }
  if (state >= states_) throw Error(ErrorCode::UnknownState, "state out of range");
  return levels_.at(i)[depth - 1][state];
}

Partition HierarchyTable::partition(PlayerIndex i, std::size_t depth) const {
  if (depth > max_depth_) {
    throw Error(ErrorCode::BadCoordinate, "depth beyond the table");
  }
  return Partition::from_keys(labels_.at(i)[depth]);
}

HierarchyProfile HierarchyTable::profile(PlayerIndex i, PointIndex state,
                                         std::size_t depth) const {
  HierarchyProfile p;
  p.player = i;
  p.state = state;
  for (std::size_t n = 1; n <= depth; ++n) p.levels.push_back(level(i, n, state));
  return p;
}

// ---------------------------------------------------------------------------
// Operations

FiniteMeasure first_order_belief(const TypeSpace& ts, PlayerIndex i,
                                 PointIndex state) {
  require_valid(ts);
  if (state >= ts.state_count()) {
    throw Error(ErrorCode::UnknownState, "state out of range");
  }
  const MeasurableMap g = MeasurableMap::make(
      ts.uncertainty_space(i), ts.parameters(), ts.nature_assignment());
  return pushforward(ts.belief_at(i, state), g, ts.parameters().field());
}

HierarchyLevel nth_order_belief(const TypeSpace& ts, PlayerIndex i,
                                PointIndex state, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadCoordinate, "depth must be >= 1");
  if (i >= ts.player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return HierarchyTable::build(ts, n).level(i, n, state);
}

HierarchyProfile hierarchy_profile(const TypeSpace& ts, PlayerIndex i,
                                   PointIndex state, std::size_t n) {
  if (i >= ts.player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  return HierarchyTable::build(ts, n).profile(i, state, n);
}

CoherencyResult coherency_check(const HierarchyProfile& profile) {
  for (std::size_t k = 1; k < profile.levels.size(); ++k) {
    const HierarchyLevel& lower = profile.levels[k - 1];
    const HierarchyLevel& upper = profile.levels[k];
    // Truncate each opponent label one level down and re-aggregate.
    LevelSupport pushed;
    bool well_formed = upper.parents.size() == upper.opponents.size();
    if (well_formed) {
      for (const auto& [key, w] : upper.support()) {
        LevelKey down{key.parameter_atom, {}};
        for (std::size_t o = 0; o < key.opponent_labels.size(); ++o) {
          const auto& up = upper.parents[o];
          if (key.opponent_labels[o] >= up.size()) {
            well_formed = false;
            break;
          }
          down.opponent_labels.push_back(up[key.opponent_labels[o]]);
        }
        if (!well_formed) break;
        pushed[down] += w;
      }
    }
    if (!well_formed || pushed != lower.support()) {
      return {false, k};
    }
  }
  return {};
}

std::size_t stabilization_depth(const TypeSpace& ts) {
  require_valid(ts);
  // Refinement is monotone, so the fixpoint is reached within |states| *
  // |players| steps; grow the table geometrically up to that bound.
  const std::size_t bound = ts.state_count() * ts.player_count();
  for (std::size_t depth = 2;; depth = std::min(depth * 2, bound + 1)) {
    const HierarchyTable table = HierarchyTable::build(ts, depth);
    if (auto n = first_stable_depth(table, ts.player_count())) return *n;
    if (depth >= bound + 1) {
      throw Error(ErrorCode::InternalMeasurabilityFailure,
                  "hierarchy partitions failed to stabilize within the bound");
    }
  }
}

QuotientResult quotient(const TypeSpace& ts) {
  const std::size_t depth = stabilization_depth(ts);
  const HierarchyTable table = HierarchyTable::build(ts, depth);
  const std::size_t players = ts.player_count();
  const std::size_t states = ts.state_count();

  // Class of w: (parameter atom, stable label of every player).
  std::map<std::vector<std::size_t>, std::size_t> class_ids;
  std::vector<std::size_t> class_of(states);
  std::vector<std::vector<PointIndex>> members;
  for (PointIndex w = 0; w < states; ++w) {
    std::vector<std::size_t> key{ts.nature_atom_of(w)};
    for (PlayerIndex i = 0; i < players; ++i) key.push_back(table.label(i, depth, w));
    auto [it, inserted] = class_ids.try_emplace(std::move(key), members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(w);
    class_of[w] = it->second;
  }
  const std::size_t q = members.size();

  TypeSpace::Parts parts;
  parts.parameters = ts.parameters();
  parts.players = ts.players();
  for (const auto& m : members) {
    if (m.size() == 1) {
      parts.states.push_back(ts.states()[m.front()]);
      continue;
    }
    std::string name = "{";
    for (std::size_t k = 0; k < m.size(); ++k) {
      name += (k ? "," : "") + ts.states()[m[k]];
    }
    parts.states.push_back(name + "}");
  }
  std::vector<std::size_t> nature_keys(q);
  for (std::size_t c = 0; c < q; ++c) {
    nature_keys[c] = ts.nature_atom_of(members[c].front());
    parts.nature_map.push_back(ts.nature_of(members[c].front()));
  }
  parts.nature_field = Partition::from_keys(nature_keys);
  for (PlayerIndex i = 0; i < players; ++i) {
    std::vector<std::size_t> keys(q);
    for (std::size_t c = 0; c < q; ++c) {
      keys[c] = table.label(i, depth, members[c].front());
    }
    parts.player_fields.push_back(Partition::from_keys(keys));
  }

  // Push each type's belief through the projection, onto the quotient's
  // M_{-i} (computed exactly as TypeSpace computes it).
  std::vector<std::vector<std::vector<Rational>>> weights(players);
  for (PlayerIndex i = 0; i < players; ++i) {
    std::vector<Partition> joined{parts.nature_field};
    for (PlayerIndex j = 0; j < players; ++j) {
      if (j != i) joined.push_back(parts.player_fields[j]);
    }
    const Partition minus = sigma_join(joined);
    const FiniteMeasurableSpace target =
        FiniteMeasurableSpace::make(parts.states, minus);
    const MeasurableMap proj =
        MeasurableMap::make(ts.uncertainty_space(i), target, class_of);
    for (const PointSet& atom : parts.player_fields[i].atoms()) {
      const PointIndex rep = members[atom.front()].front();
      weights[i].push_back(pushforward(ts.belief_at(i, rep), proj, minus).weights());
    }
  }

  TypeSpace reduced = TypeSpace::make(std::move(parts), weights);
  MeasurableMap projection =
      MeasurableMap::make(ts.world(), reduced.world(), std::move(class_of));
  return {std::move(reduced), std::move(projection), depth};
}

std::vector<std::vector<AtomIndex>> find_duplicates(const TypeSpace& ts,
                                                    PlayerIndex i) {
  if (i >= ts.player_count()) {
    throw Error(ErrorCode::UnknownPlayer, "player index out of range");
  }
  const std::size_t depth = stabilization_depth(ts);
  const HierarchyTable table = HierarchyTable::build(ts, depth);
  std::map<HierarchyLabel, std::vector<AtomIndex>> groups;
  for (AtomIndex t = 0; t < ts.type_count(i); ++t) {
    groups[table.label(i, depth, ts.field(i).atom(t).front())].push_back(t);
  }
  std::vector<std::vector<AtomIndex>> out;
  for (auto& [label, atoms] : groups) {
    if (atoms.size() >= 2) out.push_back(std::move(atoms));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tspace
