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

// Belief hierarchies extracted from a type space by iterated pushforward.
//
// The first-order belief of player i at w is f_i(w) pushed through g onto
// the parameter atoms. The depth-n belief is f_i(w) pushed through
//     w' -> (parameter atom of g(w'), (depth-(n-1) label of j at w')_{j != i})
// where a label names a distinct depth-(n-1) belief of player j. Depth 0 has
// one label per player. Labels are interned in state order, so they are
// deterministic, and two states carry the same depth-n label iff the
// depth-n beliefs (and, by coherency, all lower ones) coincide.

#ifndef TSPACE_HIERARCHY_HPP_
#define TSPACE_HIERARCHY_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tspace/measure.hpp"
#include "tspace/type_space.hpp"

namespace tspace {

using HierarchyLabel = std::size_t;

struct LevelKey {
  AtomIndex parameter_atom = 0;
  std::vector<HierarchyLabel> opponent_labels;  // parallel to opponents

  friend auto operator<=>(const LevelKey&, const LevelKey&) = default;
};

using LevelSupport = std::map<LevelKey, Rational>;

struct HierarchyLevel {
  std::size_t depth = 1;
  std::vector<PlayerIndex> opponents;
  // Measure on parameter atoms x (opponent label axes), one axis per
  // opponent holding its depth-(depth-1) labels.
  FiniteMeasure measure;
  // parents[k][l]: depth-(depth-2) label under opponent k's depth-(depth-1)
  // label l. Empty at depth 1.
  std::vector<std::vector<HierarchyLabel>> parents;

  // Nonzero weights keyed by coordinates.
  LevelSupport support() const;
};

struct HierarchyProfile {
  PlayerIndex player = 0;
  PointIndex state = 0;
  std::vector<HierarchyLevel> levels;  // depths 1..n
};

// Shared label namespace. Handing the same interner to the tables of two
// spaces over the same parameters and players makes their labels
// comparable.
class LabelInterner {
 public:
  // Label of `support` for (player, depth); `parent` is the depth-1 label
  // the new label truncates to. Throws InternalMeasurabilityFailure if the
  // support was seen before with another parent.
  HierarchyLabel intern(PlayerIndex player, std::size_t depth,
                        const LevelSupport& support, HierarchyLabel parent);
  std::size_t label_count(PlayerIndex player, std::size_t depth) const;
  HierarchyLabel parent(PlayerIndex player, std::size_t depth,
                        HierarchyLabel label) const;

 private:
  struct Slot {
    std::map<LevelSupport, HierarchyLabel> ids;
    std::vector<HierarchyLabel> parents;
  };
  Slot& slot(PlayerIndex player, std::size_t depth);
  const Slot* find_slot(PlayerIndex player, std::size_t depth) const;

  std::map<std::pair<PlayerIndex, std::size_t>, Slot> slots_;
};

class HierarchyTable {
 public:
  // Levels 1..max_depth for every player and state. Throws
  // InvalidTypeSpace, or InternalMeasurabilityFailure if a labeling map is
  // not M_{-i}-measurable.
  static HierarchyTable build(const TypeSpace& ts, std::size_t max_depth,
                              std::shared_ptr<LabelInterner> interner = nullptr);

  std::size_t max_depth() const { return max_depth_; }
  // depth 0 .. max_depth.
  HierarchyLabel label(PlayerIndex i, std::size_t depth, PointIndex state) const;
  // depth 1 .. max_depth.
  const HierarchyLevel& level(PlayerIndex i, std::size_t depth,
                              PointIndex state) const;
  // States grouped by the player's depth-n label.
  Partition partition(PlayerIndex i, std::size_t depth) const;
  HierarchyProfile profile(PlayerIndex i, PointIndex state,
                           std::size_t depth) const;

 private:
  std::size_t max_depth_ = 0;
  std::size_t states_ = 0;
  // labels_[i][n][w]
  std::vector<std::vector<std::vector<HierarchyLabel>>> labels_;
  // levels_[i][n-1][w]
  std::vector<std::vector<std::vector<HierarchyLevel>>> levels_;
  std::shared_ptr<LabelInterner> interner_;
};

// f_i(w) pushed through g onto (S, A). Throws InvalidTypeSpace,
// UnknownState.
FiniteMeasure first_order_belief(const TypeSpace& ts, PlayerIndex i,
                                 PointIndex state);
HierarchyLevel nth_order_belief(const TypeSpace& ts, PlayerIndex i,
                                PointIndex state, std::size_t n);
HierarchyProfile hierarchy_profile(const TypeSpace& ts, PlayerIndex i,
                                   PointIndex state, std::size_t n);

struct CoherencyResult {
  bool coherent = true;
  // Least k such that the marginal of v_{k+1} differs from v_k.
  std::optional<std::size_t> failing_depth;
};

CoherencyResult coherency_check(const HierarchyProfile& profile);

// Least n at which every player's depth-n partition of the states equals
// the depth-(n+1) one. Throws InvalidTypeSpace.
std::size_t stabilization_depth(const TypeSpace& ts);

struct QuotientResult {
  TypeSpace quotient;
  MeasurableMap projection;
  std::size_t depth = 0;
};

// Identifies states with equal parameter atom and equal stable hierarchy
// for every player. Singleton classes keep their label; larger classes are
// named "{a,b,...}". Throws InvalidTypeSpace.
QuotientResult quotient(const TypeSpace& ts);

// Groups (ascending atom indices, two or more) of the player's types that
// share a stable hierarchy. Throws InvalidTypeSpace.
std::vector<std::vector<AtomIndex>> find_duplicates(const TypeSpace& ts,
                                                    PlayerIndex i);

}  // namespace tspace

#endif  // TSPACE_HIERARCHY_HPP_
