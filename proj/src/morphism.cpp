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

#include "tspace/morphism.hpp"

#include <algorithm>
#include <map>

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

void require_same_frame(const TypeSpace& src, const TypeSpace& tgt) {
  if (!(src.parameters() == tgt.parameters())) {
    throw Error(ErrorCode::ParameterSpaceMismatch,
                "type spaces are based on different parameter spaces");
  }
  if (src.players() != tgt.players()) {
    throw Error(ErrorCode::ParameterSpaceMismatch,
                "type spaces have different player sets");
  }
}

// One condition of the morphism definition, restricted to the states it
// mentions; checkable once the search has assigned state `ready`.
struct Constraint {
  enum class Kind { Nature, JointAtom, MinusAtom, Belief } kind;
  std::size_t ready = 0;
  PlayerIndex player = 0;
  PointIndex state = 0;
  PointSet points;  // the atom for JointAtom / MinusAtom
};

class MorphismSearch {
 public:
  MorphismSearch(const TypeSpace& src, const TypeSpace& tgt)
      : src_(src), tgt_(tgt), phi_(src.state_count(), 0) {
    const std::size_t n = src.state_count();
    std::vector<Constraint> all;
    for (PointIndex w = 0; w < n; ++w) {
      all.push_back({Constraint::Kind::Nature, w, 0, w, {}});
    }
    for (const PointSet& atom : src.joint_field().atoms()) {
      all.push_back({Constraint::Kind::JointAtom, atom.back(), 0, 0, atom});
    }
    for (PlayerIndex i = 0; i < src.player_count(); ++i) {
      for (const PointSet& atom : src.minus_field(i).atoms()) {
        all.push_back({Constraint::Kind::MinusAtom, atom.back(), i, 0, atom});
      }
    }
    for (PlayerIndex i = 0; i < src.player_count(); ++i) {
      for (PointIndex w = 0; w < n; ++w) {
        std::size_t ready = w;
        for (AtomIndex a : src.belief_at(i, w).support()) {
          ready = std::max(ready, src.minus_field(i).atom(a).back());
        }
        all.push_back({Constraint::Kind::Belief, ready, i, w, {}});
      }
    }
    // Stable sort keeps the atom constraints ahead of the belief checks
    // that rely on them at the same index.
    std::stable_sort(all.begin(), all.end(),
                     [](const Constraint& a, const Constraint& b) {
                       return a.ready < b.ready;
                     });
    by_ready_.resize(n);
    for (auto& c : all) by_ready_[c.ready].push_back(std::move(c));
  }

  std::vector<std::vector<PointIndex>> run() {
    found_.clear();
    if (src_.state_count() > 0) extend(0);
    return std::move(found_);
  }

 private:
  bool holds(const Constraint& c) const {
    switch (c.kind) {
      case Constraint::Kind::Nature:
        return src_.nature_atom_of(c.state) == tgt_.nature_atom_of(phi_[c.state]);
      case Constraint::Kind::JointAtom:
        return same_atom(tgt_.joint_field(), c.points);
      case Constraint::Kind::MinusAtom:
        return same_atom(tgt_.minus_field(c.player), c.points);
      case Constraint::Kind::Belief: {
        const PlayerIndex i = c.player;
        const FiniteMeasure& mu = src_.belief_at(i, c.state);
        const Partition& tgt_minus = tgt_.minus_field(i);
        std::map<AtomIndex, Rational> mass;
        for (AtomIndex a : mu.support()) {
          const PointIndex x = src_.minus_field(i).atom(a).front();
          mass[tgt_minus.atom_of(phi_[x])] += mu.weight(a);
        }
        const FiniteMeasure& image = tgt_.belief_at(i, phi_[c.state]);
        for (AtomIndex b = 0; b < tgt_minus.atom_count(); ++b) {
          auto it = mass.find(b);
          const Rational expected = it == mass.end() ? Rational(0) : it->second;
          if (image.weight(b) != expected) return false;
        }
        return true;
      }
    }
    return false;
  }

  bool same_atom(const Partition& field, const PointSet& points) const {
    const AtomIndex first = field.atom_of(phi_[points.front()]);
    return std::all_of(points.begin(), points.end(), [&](PointIndex x) {
      return field.atom_of(phi_[x]) == first;
    });
  }

  void extend(std::size_t k) {
    for (PointIndex v = 0; v < tgt_.state_count(); ++v) {
      phi_[k] = v;
      bool ok = true;
      for (const Constraint& c : by_ready_[k]) {
        if (!holds(c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (k + 1 == phi_.size()) {
        found_.push_back(phi_);
      } else {
        extend(k + 1);
      }
    }
  }

  const TypeSpace& src_;
  const TypeSpace& tgt_;
  std::vector<std::vector<Constraint>> by_ready_;
  std::vector<PointIndex> phi_;
  std::vector<std::vector<PointIndex>> found_;
};

}  // namespace

std::string to_string(MorphismViolation::Kind kind) {
  switch (kind) {
    case MorphismViolation::Kind::NotMeasurable: return "not-measurable";
    case MorphismViolation::Kind::NatureMismatch: return "nature-mismatch";
    case MorphismViolation::Kind::BeliefPreimage: return "belief-preimage";
    case MorphismViolation::Kind::BeliefMismatch: return "belief-mismatch";
  }
  return "unknown";
}

MorphismReport check_morphism(const TypeSpace& src, const TypeSpace& tgt,
                              const MeasurableMap& map) {
  require_same_frame(src, tgt);
  require_valid(src);
  require_valid(tgt);
  if (!map.domain().same_carrier(src.world()) ||
      !map.target().same_carrier(tgt.world())) {
    throw Error(ErrorCode::CarrierMismatch,
                "map does not go between the two carriers");
  }
  MorphismReport report;
  using Kind = MorphismViolation::Kind;

  const MeasurabilityCheck joint =
      is_measurable(map, src.joint_field(), tgt.joint_field());
  if (!joint.measurable) {
    report.violations.push_back(
        {Kind::NotMeasurable, std::nullopt, std::nullopt, joint.witness,
         "preimage of " + describe(tgt.world(), joint.witness) + " is " +
             describe(src.world(), joint.preimage) +
             ", not measurable for the joint field"});
  }

  const FiniteMeasurableSpace& params = src.parameters();
  for (PointIndex w = 0; w < src.state_count(); ++w) {
    const AtomIndex here = src.nature_atom_of(w);
    if (here != tgt.nature_atom_of(map(w))) {
      const PointSet& a = params.field().atom(here);
      report.violations.push_back(
          {Kind::NatureMismatch, std::nullopt, w, a,
           "A = " + describe(params, a) + ": state " + src.world().label(w) +
               " is in g^-1(A) but its image " + tgt.world().label(map(w)) +
               " is not in g'^-1(A)"});
    }
  }

  for (PlayerIndex i = 0; i < src.player_count(); ++i) {
    const std::string& id = src.players()[i];
    const Partition& tgt_minus = tgt.minus_field(i);
    std::vector<std::optional<PointSet>> preimages(tgt_minus.atom_count());
    for (AtomIndex b = 0; b < tgt_minus.atom_count(); ++b) {
      PointSet pre = map.preimage(tgt_minus.atom(b));
      if (src.minus_field(i).is_measurable(pre)) {
        preimages[b] = std::move(pre);
      } else {
        report.violations.push_back(
            {Kind::BeliefPreimage, i, std::nullopt, tgt_minus.atom(b),
             "player " + id + ": preimage of " +
                 describe(tgt.world(), tgt_minus.atom(b)) +
                 " is not measurable for M_{-" + id + "}"});
      }
    }
    for (PointIndex w = 0; w < src.state_count(); ++w) {
      const FiniteMeasure& image = tgt.belief_at(i, map(w));
      for (AtomIndex b = 0; b < tgt_minus.atom_count(); ++b) {
        if (!preimages[b]) continue;
        const Rational pulled = measure_of(src.belief_at(i, w), *preimages[b]);
        if (pulled != image.weight(b)) {
          report.violations.push_back(
              {Kind::BeliefMismatch, i, w, tgt_minus.atom(b),
               "player " + id + " at " + src.world().label(w) + ", A = " +
                   describe(tgt.world(), tgt_minus.atom(b)) + ": image belief " +
                   to_string(image.weight(b)) + " but pulled-back belief " +
                   to_string(pulled)});
        }
      }
    }
  }
  return report;
}

MeasurableMap state_map(
    const TypeSpace& src, const TypeSpace& tgt,
    std::span<const std::pair<std::string, std::string>> pairs) {
  constexpr PointIndex kUnset = static_cast<PointIndex>(-1);
  std::vector<PointIndex> assignment(src.state_count(), kUnset);
  for (const auto& [from, to] : pairs) {
    const PointIndex x = src.state_index(from);
    if (assignment[x] != kUnset) {
      throw Error(ErrorCode::UnknownState, "state \"" + from + "\" mapped twice");
    }
    assignment[x] = tgt.state_index(to);
  }
  for (PointIndex x = 0; x < assignment.size(); ++x) {
    if (assignment[x] == kUnset) {
      throw Error(ErrorCode::UnknownState,
                  "state \"" + src.states()[x] + "\" is not mapped");
    }
  }
  return MeasurableMap::make(src.world(), tgt.world(), std::move(assignment));
}

std::vector<MeasurableMap> find_morphisms(const TypeSpace& src,
                                          const TypeSpace& tgt,
                                          std::uint64_t max_search) {
  require_same_frame(src, tgt);
  require_valid(src);
  require_valid(tgt);
  std::uint64_t candidates = 1;
  for (std::size_t k = 0; k < src.state_count(); ++k) {
    if (candidates > max_search / std::max<std::uint64_t>(tgt.state_count(), 1)) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  std::to_string(tgt.state_count()) + "^" +
                      std::to_string(src.state_count()) +
                      " candidate maps exceed the limit of " +
                      std::to_string(max_search));
    }
    candidates *= tgt.state_count();
  }

  std::vector<MeasurableMap> out;
  for (auto& assignment : MorphismSearch(src, tgt).run()) {
    MeasurableMap map =
        MeasurableMap::make(src.world(), tgt.world(), std::move(assignment));
    // The incremental constraints and the reporting check must agree.
    if (!check_morphism(src, tgt, map).ok()) {
      throw Error(ErrorCode::NotAMorphism,
                  "search accepted a map that fails the morphism check");
    }
    out.push_back(std::move(map));
  }
  return out;
}

bool is_isomorphism(const TypeSpace& src, const TypeSpace& tgt,
                    const MeasurableMap& map) {
  const MorphismReport report = check_morphism(src, tgt, map);
  if (!report.ok()) {
    throw Error(ErrorCode::NotAMorphism, report.violations.front().message);
  }
  if (src.state_count() != tgt.state_count()) return false;
  constexpr PointIndex kUnset = static_cast<PointIndex>(-1);
  std::vector<PointIndex> inverse(tgt.state_count(), kUnset);
  for (PointIndex x = 0; x < src.state_count(); ++x) {
    if (inverse[map(x)] != kUnset) return false;
    inverse[map(x)] = x;
  }
  const MeasurableMap back =
      MeasurableMap::make(tgt.world(), src.world(), std::move(inverse));
  return check_morphism(tgt, src, back).ok();
}

bool TerminalityReport::terminal() const {
  return std::all_of(counts.begin(), counts.end(),
                     [](std::size_t c) { return c == 1; });
}

TerminalityReport verify_terminality_small(std::span<const TypeSpace> candidates,
                                           const TypeSpace& target,
                                           std::uint64_t max_search) {
  TerminalityReport report;
  for (const TypeSpace& c : candidates) {
    report.counts.push_back(find_morphisms(c, target, max_search).size());
  }
  return report;
}

}  // namespace tspace
