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

// Type morphisms: maps between carriers that commute with the nature maps
// and carry every type's belief onto the belief of its image.

#ifndef TSPACE_MORPHISM_HPP_
#define TSPACE_MORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspace/type_space.hpp"

namespace tspace {

inline constexpr std::uint64_t kDefaultMaxSearch = 1'000'000;

struct MorphismViolation {
  enum class Kind {
    NotMeasurable,      // not measurable for the joint fields
    NatureMismatch,     // g^-1(A) != (g' o phi)^-1(A)
    BeliefPreimage,     // phi^-1(A) is not M_{-i}-measurable
    BeliefMismatch,     // f'_i(phi(w))(A) != f_i(w)(phi^-1(A))
  };
  Kind kind;
  std::optional<PlayerIndex> player;
  std::optional<PointIndex> state;  // source state
  PointSet set;                     // A: parameter set or target state set
  std::string message;
};

std::string to_string(MorphismViolation::Kind kind);

struct MorphismReport {
  std::vector<MorphismViolation> violations;
  bool ok() const { return violations.empty(); }
};

// `map` goes from src.world() to tgt.world(). Throws
// ParameterSpaceMismatch (different S or player set) and CarrierMismatch.
MorphismReport check_morphism(const TypeSpace& src, const TypeSpace& tgt,
                              const MeasurableMap& map);

// Map from src to tgt given as state labels, e.g. {"w", "w2"} pairs.
MeasurableMap state_map(const TypeSpace& src, const TypeSpace& tgt,
                        std::span<const std::pair<std::string, std::string>> pairs);

// Every morphism, in lexicographic order of the image list. The search is
// exhaustive over all |tgt|^|src| maps; each constraint is checked as soon
// as every state it mentions is assigned. Throws SearchSpaceTooLarge when
// the candidate count exceeds max_search, ParameterSpaceMismatch.
std::vector<MeasurableMap> find_morphisms(const TypeSpace& src,
                                          const TypeSpace& tgt,
                                          std::uint64_t max_search = kDefaultMaxSearch);

// Throws NotAMorphism when `map` fails check_morphism.
bool is_isomorphism(const TypeSpace& src, const TypeSpace& tgt,
                    const MeasurableMap& map);

struct TerminalityReport {
  std::vector<std::size_t> counts;  // morphisms from each candidate
  bool terminal() const;
};

TerminalityReport verify_terminality_small(
    std::span<const TypeSpace> candidates, const TypeSpace& target,
    std::uint64_t max_search = kDefaultMaxSearch);

}  // namespace tspace

#endif  // TSPACE_MORPHISM_HPP_
