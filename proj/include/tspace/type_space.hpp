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

// Finite type spaces: a parameter space S, a set of states of the world
// with one information field per player (plus nature's field "0"), the
// nature map g, and one belief per player type.
//
// Beliefs are keyed by the atoms of the owning player's field, so each type
// function is measurable with respect to that field by construction. The
// field of player i's uncertainty, M_{-i}, is always computed as the join of
// nature's field with every other player's field; it is never supplied.

#ifndef TSPACE_TYPE_SPACE_HPP_
#define TSPACE_TYPE_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tspace/measure.hpp"

namespace tspace {

// Reserved id of nature; never a member of the player set.
inline constexpr std::string_view kNature = "0";

using PlayerIndex = std::size_t;

class TypeSpace {
 public:
  struct Parts {
    FiniteMeasurableSpace parameters;
    std::vector<std::string> players;
    std::vector<std::string> states;
    Partition nature_field;
    std::vector<Partition> player_fields;  // parallel to players
    std::vector<PointIndex> nature_map;    // state -> parameter point
    // beliefs[i][t]: belief of player i's type t (atom t of its field).
    std::vector<std::vector<FiniteMeasure>> beliefs;
  };

  // Structural checks only (sizes, ids, labels). Semantic conditions such
  // as measurability of g or the belief base fields are reported by
  // validate_type_space. Throws InvalidTypeSpace / DuplicateLabel.
  static TypeSpace make(Parts parts);

  // Convenience: builds every belief on the computed (carrier, M_{-i}) from
  // raw per-atom weights; parts.beliefs is ignored. Weights are not checked
  // here, so defective rows surface in validate_type_space.
  static TypeSpace make(Parts parts,
                        const std::vector<std::vector<std::vector<Rational>>>&
                            belief_weights);

  const FiniteMeasurableSpace& parameters() const { return d_->parts.parameters; }
  const std::vector<std::string>& players() const { return d_->parts.players; }
  std::size_t player_count() const { return d_->parts.players.size(); }
  // Throws UnknownPlayer, also for the reserved nature id.
  PlayerIndex player_index(std::string_view id) const;

  std::size_t state_count() const { return d_->parts.states.size(); }
  const std::vector<std::string>& states() const { return d_->parts.states; }
  // Carrier with the joint field M (join of every field).
  const FiniteMeasurableSpace& world() const { return d_->world; }
  // Throws UnknownState.
  PointIndex state_index(std::string_view label) const;

  const Partition& nature_field() const { return d_->parts.nature_field; }
  const Partition& field(PlayerIndex i) const;
  const Partition& minus_field(PlayerIndex i) const;
  const Partition& joint_field() const { return d_->world.field(); }
  // Carrier equipped with M_{-i}; the base space of player i's beliefs.
  const FiniteMeasurableSpace& uncertainty_space(PlayerIndex i) const;

  const std::vector<PointIndex>& nature_assignment() const {
    return d_->parts.nature_map;
  }
  // g as a map from (carrier, M_0) to S.
  MeasurableMap nature_map() const;
  PointIndex nature_of(PointIndex state) const {
    return d_->parts.nature_map.at(state);
  }
  AtomIndex nature_atom_of(PointIndex state) const {
    return parameters().field().atom_of(nature_of(state));
  }

  AtomIndex type_of(PlayerIndex i, PointIndex state) const {
    return field(i).atom_of(state);
  }
  std::size_t type_count(PlayerIndex i) const { return field(i).atom_count(); }
  const FiniteMeasure& belief(PlayerIndex i, AtomIndex type) const;
  const FiniteMeasure& belief_at(PlayerIndex i, PointIndex state) const {
    return belief(i, type_of(i, state));
  }
  const std::vector<std::vector<FiniteMeasure>>& beliefs() const {
    return d_->parts.beliefs;
  }

  const Parts& parts() const { return d_->parts; }

 private:
  struct Data {
    Parts parts;
    FiniteMeasurableSpace world;
    std::vector<Partition> minus_fields;
    std::vector<FiniteMeasurableSpace> uncertainty;
  };
  explicit TypeSpace(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// sigma(M_0 u U_{j != i} M_j). Throws UnknownPlayer.
Partition minus_i_field(const TypeSpace& ts, std::string_view player);

struct Violation {
  std::string kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_type_space(const TypeSpace& ts);
// Throws InvalidTypeSpace listing the first violation.
void require_valid(const TypeSpace& ts);

struct PlayerCompleteness {
  PlayerIndex player = 0;
  bool complete = false;
  // Present when incomplete: a probability on (carrier, M_{-i}) that no
  // type of the player holds.
  std::optional<FiniteMeasure> witness;
};

struct CompletenessVerdict {
  std::vector<PlayerCompleteness> players;
  bool complete() const;
};

// Throws InvalidTypeSpace.
CompletenessVerdict check_completeness(const TypeSpace& ts);

// B_i^p(E) = { w : f_i(w)(E) >= p }. Throws EventNotMeasurable when E is
// not M_{-i}-measurable, BadProbability when p is outside [0,1].
PointSet belief_operator(const TypeSpace& ts, PlayerIndex i,
                         const PointSet& event, const Rational& p);
PointSet mutual_belief(const TypeSpace& ts, const PointSet& event,
                       const Rational& p);
// Decreasing iteration E_0 = mutual(E), E_{k+1} = E_k n mutual(E_k).
PointSet common_belief(const TypeSpace& ts, const PointSet& event,
                       const Rational& p);

}  // namespace tspace

#endif  // TSPACE_TYPE_SPACE_HPP_
