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

#include "tspace/measure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "tspace/error.hpp"

namespace tspace {
namespace {

constexpr AtomIndex kNoAtom = static_cast<AtomIndex>(-1);

std::string describe(const std::vector<PointIndex>& points) {
  std::string out = "[";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(points[k]);
  }
  return out + "]";
}

std::string describe(const FiniteMeasurableSpace& space, const PointSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += space.label(set[k]);
  }
  return out + "}";
}

// Row-major flattening of a coordinate tuple.
std::size_t flatten(std::span<const std::size_t> coords,
                    std::span<const std::size_t> extents) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    index = index * extents[k] + coords[k];
  }
  return index;
}

std::vector<std::size_t> unflatten(std::size_t index,
                                   std::span<const std::size_t> extents) {
  std::vector<std::size_t> coords(extents.size());
  for (std::size_t k = extents.size(); k-- > 0;) {
    coords[k] = index % extents[k];
    index /= extents[k];
  }
  return coords;
}

std::vector<FiniteMeasurableSpace> coordinates_of(
    const FiniteMeasurableSpace& space) {
  if (space.is_product()) return space.factors();
  return {space};
}

}  // namespace

// ---------------------------------------------------------------------------
// Point sets

PointSet make_point_set(std::vector<PointIndex> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet full_set(std::size_t carrier_size) {
  PointSet out(carrier_size);
  std::iota(out.begin(), out.end(), PointIndex{0});
  return out;
}

// ---------------------------------------------------------------------------
// Partition

namespace {

struct AtomDefect {
  std::size_t atom;
  std::string reason;
};

// First structural defect in a candidate atom list, if any.
std::optional<AtomDefect> find_atom_defect(
    std::size_t carrier_size, const std::vector<std::vector<PointIndex>>& atoms) {
  std::vector<AtomIndex> owner(carrier_size, kNoAtom);
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (atoms[a].empty()) return AtomDefect{a, "is empty"};
    for (PointIndex x : atoms[a]) {
      if (x >= carrier_size) return AtomDefect{a, "leaves the carrier"};
      if (owner[x] == a) return AtomDefect{a, "repeats a point"};
      if (owner[x] != kNoAtom) {
        return AtomDefect{a, "overlaps atom #" + std::to_string(owner[x])};
      }
      owner[x] = a;
    }
  }
  for (PointIndex x = 0; x < carrier_size; ++x) {
    if (owner[x] == kNoAtom) {
      return AtomDefect{atoms.size(),
                        "point " + std::to_string(x) + " is not covered"};
    }
  }
  return std::nullopt;
}

}  // namespace

Partition Partition::from_atoms(std::size_t carrier_size,
                                std::vector<std::vector<PointIndex>> atoms) {
  if (auto defect = find_atom_defect(carrier_size, atoms)) {
    if (defect->atom == atoms.size()) {
      throw Error(ErrorCode::NotAPartition, defect->reason);
    }
    throw Error(ErrorCode::NotAPartition,
                "atom #" + std::to_string(defect->atom) + " " +
                    describe(atoms[defect->atom]) + " " + defect->reason);
  }
  Partition p;
  p.atom_of_.assign(carrier_size, kNoAtom);
  p.atoms_.reserve(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (PointIndex x : atoms[a]) p.atom_of_[x] = a;
    p.atoms_.push_back(make_point_set(std::move(atoms[a])));
  }
  return p;
}

Partition Partition::discrete(std::size_t carrier_size) {
  std::vector<std::vector<PointIndex>> atoms(carrier_size);
  for (PointIndex x = 0; x < carrier_size; ++x) atoms[x] = {x};
  return from_atoms(carrier_size, std::move(atoms));
}

Partition Partition::trivial(std::size_t carrier_size) {
  if (carrier_size == 0) return from_atoms(0, {});
  return from_atoms(carrier_size, {full_set(carrier_size)});
}

Partition Partition::from_keys(std::span<const std::size_t> key_of_point) {
  std::map<std::size_t, AtomIndex> atom_for_key;
  std::vector<std::vector<PointIndex>> atoms;
  for (PointIndex x = 0; x < key_of_point.size(); ++x) {
    auto [it, inserted] = atom_for_key.try_emplace(key_of_point[x], atoms.size());
    if (inserted) atoms.emplace_back();
    atoms[it->second].push_back(x);
  }
  return from_atoms(key_of_point.size(), std::move(atoms));
}

bool Partition::is_measurable(const PointSet& set) const {
  return !cut_fragment(set).has_value();
}

std::optional<PointSet> Partition::cut_fragment(const PointSet& set) const {
  std::vector<std::size_t> hits(atoms_.size(), 0);
  for (PointIndex x : set) {
    if (x >= carrier_size()) {
      throw Error(ErrorCode::CarrierMismatch,
                  "point " + std::to_string(x) + " outside carrier");
    }
    ++hits[atom_of_[x]];
  }
  for (PointIndex x : set) {
    const AtomIndex a = atom_of_[x];
    if (hits[a] != atoms_[a].size()) return set_intersection(atoms_[a], set);
  }
  return std::nullopt;
}

std::vector<AtomIndex> Partition::atoms_in(const PointSet& set) const {
  std::vector<AtomIndex> out;
  for (PointIndex x : set) out.push_back(atom_of_.at(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.carrier_size() != carrier_size()) return false;
  for (const PointSet& atom : atoms_) {
    const AtomIndex c = coarser.atom_of(atom.front());
    for (PointIndex x : atom) {
      if (coarser.atom_of(x) != c) return false;
    }
  }
  return true;
}

bool Partition::same_atoms(const Partition& other) const {
  return carrier_size() == other.carrier_size() && refines(other) &&
         other.refines(*this);
}

Partition Partition::canonical() const {
  std::vector<std::vector<PointIndex>> atoms(atoms_.begin(), atoms_.end());
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return from_atoms(carrier_size(), std::move(atoms));
}

Partition sigma_join(std::span<const Partition> fields) {
  if (fields.empty()) {
    throw Error(ErrorCode::BadCoordinate, "sigma_join of no fields");
  }
  const std::size_t n = fields.front().carrier_size();
  for (const Partition& f : fields) {
    if (f.carrier_size() != n) {
      throw Error(ErrorCode::CarrierMismatch,
                  "sigma_join over carriers of size " + std::to_string(n) +
                      " and " + std::to_string(f.carrier_size()));
    }
  }
  // Two points share a joined atom iff they share an atom in every input.
  std::map<std::vector<AtomIndex>, AtomIndex> key_ids;
  std::vector<std::size_t> keys(n);
  for (PointIndex x = 0; x < n; ++x) {
    std::vector<AtomIndex> signature;
    signature.reserve(fields.size());
    for (const Partition& f : fields) signature.push_back(f.atom_of(x));
    keys[x] = key_ids.try_emplace(std::move(signature), key_ids.size())
                  .first->second;
  }
  return Partition::from_keys(keys);
}

// ---------------------------------------------------------------------------
// FiniteMeasurableSpace

FiniteMeasurableSpace::FiniteMeasurableSpace()
    : data_(std::make_shared<Data>()) {}

std::shared_ptr<FiniteMeasurableSpace::Data> FiniteMeasurableSpace::build(
    std::vector<std::string> points) {
  auto data = std::make_shared<Data>();
  for (PointIndex x = 0; x < points.size(); ++x) {
    if (!data->index.emplace(points[x], x).second) {
      throw Error(ErrorCode::DuplicateLabel,
                  "label \"" + points[x] + "\" appears twice");
    }
  }
  data->labels = std::move(points);
  return data;
}

FiniteMeasurableSpace FiniteMeasurableSpace::make(
    std::vector<std::string> points,
    const std::vector<std::vector<std::string>>& atoms) {
  auto data = build(std::move(points));
  std::vector<std::vector<PointIndex>> indexed;
  indexed.reserve(atoms.size());
  for (const auto& atom : atoms) {
    std::vector<PointIndex> members;
    for (const auto& label : atom) {
      auto it = data->index.find(label);
      if (it == data->index.end()) {
        throw Error(ErrorCode::NotAPartition,
                    "atom mentions unknown point \"" + label + "\"");
      }
      members.push_back(it->second);
    }
    indexed.push_back(std::move(members));
  }
  if (auto defect = find_atom_defect(data->labels.size(), indexed)) {
    if (defect->atom == atoms.size()) {
      throw Error(ErrorCode::NotAPartition, "atoms do not cover the points");
    }
    std::string listed = "[";
    for (std::size_t k = 0; k < atoms[defect->atom].size(); ++k) {
      listed += (k ? "," : "") + atoms[defect->atom][k];
    }
    throw Error(ErrorCode::NotAPartition,
                "offending set " + listed + "] " + defect->reason);
  }
  data->field = Partition::from_atoms(data->labels.size(), std::move(indexed));
  return FiniteMeasurableSpace(std::move(data));
}

FiniteMeasurableSpace FiniteMeasurableSpace::make(
    std::vector<std::string> points, Partition field) {
  auto data = build(std::move(points));
  if (field.carrier_size() != data->labels.size()) {
    throw Error(ErrorCode::CarrierMismatch,
                "field carrier size differs from point count");
  }
  data->field = std::move(field);
  return FiniteMeasurableSpace(std::move(data));
}

FiniteMeasurableSpace FiniteMeasurableSpace::discrete(
    std::vector<std::string> points) {
  const std::size_t n = points.size();
  return make(std::move(points), Partition::discrete(n));
}

FiniteMeasurableSpace FiniteMeasurableSpace::with_field(Partition field) const {
  if (field.carrier_size() != size()) {
    throw Error(ErrorCode::CarrierMismatch,
                "field carrier size differs from point count");
  }
  if (field == data_->field) return *this;
  // Any other field is no longer the product field.
  auto data = std::make_shared<Data>(*data_);
  data->field = std::move(field);
  data->factors.clear();
  return FiniteMeasurableSpace(std::move(data));
}

std::optional<PointIndex> FiniteMeasurableSpace::find(
    std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

PointIndex FiniteMeasurableSpace::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::UnknownPoint,
              "no point \"" + std::string(label) + "\"");
}

PointSet FiniteMeasurableSpace::to_set(std::span<const std::string> labels) const {
  std::vector<PointIndex> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return make_point_set(std::move(out));
}

std::vector<std::string> FiniteMeasurableSpace::labels_of(
    const PointSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (PointIndex x : set) out.push_back(label(x));
  return out;
}

std::string FiniteMeasurableSpace::atom_label(AtomIndex a) const {
  std::string out;
  for (PointIndex x : field().atom(a)) {
    if (!out.empty()) out += "+";
    out += label(x);
  }
  return out;
}

bool FiniteMeasurableSpace::same_carrier(
    const FiniteMeasurableSpace& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

bool operator==(const FiniteMeasurableSpace& a, const FiniteMeasurableSpace& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels &&
         a.data_->field == b.data_->field &&
         a.data_->factors == b.data_->factors;
}

FiniteMeasurableSpace product_space(const FiniteMeasurableSpace& x,
                                    const FiniteMeasurableSpace& y) {
  std::vector<FiniteMeasurableSpace> factors = coordinates_of(x);
  for (auto& f : coordinates_of(y)) factors.push_back(std::move(f));
  return product_space(factors);
}

FiniteMeasurableSpace product_space(
    std::span<const FiniteMeasurableSpace> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::NotAProduct, "product of no factors");
  }
  std::vector<std::size_t> point_extents, atom_extents;
  std::size_t points = 1, atoms = 1;
  for (const auto& f : factors) {
    point_extents.push_back(f.size());
    atom_extents.push_back(f.field().atom_count());
    points *= f.size();
    atoms *= f.field().atom_count();
  }

  std::vector<std::string> labels(points);
  for (std::size_t p = 0; p < points; ++p) {
    const auto coords = unflatten(p, point_extents);
    std::string l = "(";
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (k) l += ",";
      l += factors[k].label(coords[k]);
    }
    labels[p] = l + ")";
  }

  std::vector<std::vector<PointIndex>> atom_sets(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    const auto atom_coords = unflatten(a, atom_extents);
    // Cartesian product of the factor atoms.
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& t : tuples) {
        for (PointIndex x : factors[k].field().atom(atom_coords[k])) {
          auto extended = t;
          extended.push_back(x);
          next.push_back(std::move(extended));
        }
      }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) {
      atom_sets[a].push_back(flatten(t, point_extents));
    }
  }

  auto data = FiniteMeasurableSpace::build(std::move(labels));
  data->field = Partition::from_atoms(points, std::move(atom_sets));
  if (factors.size() > 1) {
    data->factors.assign(factors.begin(), factors.end());
  }
  return FiniteMeasurableSpace(std::move(data));
}

// ---------------------------------------------------------------------------
// MeasurableMap

MeasurableMap MeasurableMap::make(FiniteMeasurableSpace domain,
                                  FiniteMeasurableSpace target,
                                  std::vector<PointIndex> assignment) {
  if (assignment.size() != domain.size()) {
    throw Error(ErrorCode::UnknownPoint,
                "map assigns " + std::to_string(assignment.size()) +
                    " images for " + std::to_string(domain.size()) +
                    " domain points");
  }
  for (PointIndex x = 0; x < assignment.size(); ++x) {
    if (assignment[x] >= target.size()) {
      throw Error(ErrorCode::UnknownPoint,
                  "image of \"" + domain.label(x) + "\" is outside the target");
    }
  }
  return MeasurableMap(std::move(domain), std::move(target),
                       std::move(assignment));
}

PointSet MeasurableMap::preimage(const PointSet& target_set) const {
  PointSet out;
  for (PointIndex x = 0; x < assignment_.size(); ++x) {
    if (std::binary_search(target_set.begin(), target_set.end(),
                           assignment_[x])) {
      out.push_back(x);
    }
  }
  return out;
}

PointSet MeasurableMap::image(const PointSet& domain_set) const {
  std::vector<PointIndex> out;
  for (PointIndex x : domain_set) out.push_back(assignment_.at(x));
  return make_point_set(std::move(out));
}

MeasurableMap compose(const MeasurableMap& outer, const MeasurableMap& inner) {
  if (!inner.target().same_carrier(outer.domain())) {
    throw Error(ErrorCode::CarrierMismatch,
                "composed maps do not share the middle carrier");
  }
  std::vector<PointIndex> assignment(inner.domain().size());
  for (PointIndex x = 0; x < assignment.size(); ++x) {
    assignment[x] = outer(inner(x));
  }
  return MeasurableMap::make(inner.domain(), outer.target(),
                             std::move(assignment));
}

Partition induced_field(const MeasurableMap& map) {
  const Partition& tgt = map.target().field();
  std::vector<std::vector<PointIndex>> atoms(tgt.atom_count());
  for (PointIndex x = 0; x < map.domain().size(); ++x) {
    atoms[tgt.atom_of(map(x))].push_back(x);
  }
  std::erase_if(atoms, [](const auto& a) { return a.empty(); });
  return Partition::from_atoms(map.domain().size(), std::move(atoms));
}

MeasurabilityCheck is_measurable(const MeasurableMap& map,
                                 const Partition& src_field,
                                 const Partition& tgt_field) {
  if (src_field.carrier_size() != map.domain().size() ||
      tgt_field.carrier_size() != map.target().size()) {
    throw Error(ErrorCode::CarrierMismatch,
                "fields do not live on the map's carriers");
  }
  // Preimage commutes with unions, so checking target atoms suffices.
  for (const PointSet& atom : tgt_field.atoms()) {
    PointSet pre = map.preimage(atom);
    if (!src_field.is_measurable(pre)) {
      return {false, atom, std::move(pre)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// FiniteMeasure

FiniteMeasure FiniteMeasure::make(FiniteMeasurableSpace base,
                                  std::vector<Rational> weights) {
  FiniteMeasure mu = unchecked(std::move(base), std::move(weights));
  for (const Rational& w : mu.weights_) {
    if (w < 0) {
      throw Error(ErrorCode::NotAProbability,
                  "negative weight " + to_string(w));
    }
  }
  if (mu.total() != 1) {
    throw Error(ErrorCode::NotAProbability,
                "weights sum to " + to_string(mu.total()));
  }
  return mu;
}

FiniteMeasure FiniteMeasure::unchecked(FiniteMeasurableSpace base,
                                       std::vector<Rational> weights) {
  if (weights.size() != base.field().atom_count()) {
    throw Error(ErrorCode::CarrierMismatch,
                std::to_string(weights.size()) + " weights for " +
                    std::to_string(base.field().atom_count()) + " atoms");
  }
  return FiniteMeasure(std::move(base), std::move(weights));
}

Rational FiniteMeasure::total() const {
  Rational sum = 0;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

bool FiniteMeasure::is_probability() const {
  return total() == 1 &&
         std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w >= 0; });
}

std::vector<AtomIndex> FiniteMeasure::support() const {
  std::vector<AtomIndex> out;
  for (AtomIndex a = 0; a < weights_.size(); ++a) {
    if (weights_[a] != 0) out.push_back(a);
  }
  return out;
}

FiniteMeasure dirac(const FiniteMeasurableSpace& space, std::string_view point) {
  return dirac(space, space.index_of(point));
}

FiniteMeasure dirac(const FiniteMeasurableSpace& space, PointIndex point) {
  if (point >= space.size()) {
    throw Error(ErrorCode::UnknownPoint,
                "point index " + std::to_string(point) + " out of range");
  }
  std::vector<Rational> weights(space.field().atom_count(), Rational(0));
  weights[space.field().atom_of(point)] = 1;
  return FiniteMeasure::make(space, std::move(weights));
}

FiniteMeasure product_measure(const FiniteMeasure& mu, const FiniteMeasure& nu) {
  FiniteMeasurableSpace space = product_space(mu.base(), nu.base());
  // Atoms of the product are row-major over (mu atom, nu atom); when a base
  // is itself a product its atoms are already row-major over its factors.
  std::vector<Rational> weights;
  weights.reserve(space.field().atom_count());
  for (const Rational& a : mu.weights()) {
    for (const Rational& b : nu.weights()) weights.push_back(a * b);
  }
  return FiniteMeasure::unchecked(std::move(space), std::move(weights));
}

FiniteMeasure pushforward(const FiniteMeasure& mu, const MeasurableMap& map,
                          const Partition& tgt_field) {
  if (!mu.base().same_carrier(map.domain())) {
    throw Error(ErrorCode::CarrierMismatch,
                "measure and map live on different carriers");
  }
  const Partition& src = mu.base().field();
  const MeasurabilityCheck check = is_measurable(map, src, tgt_field);
  if (!check.measurable) {
    throw Error(ErrorCode::NotMeasurable,
                "preimage of " + describe(map.target(), check.witness) +
                    " is " + describe(map.domain(), check.preimage) +
                    ", not a union of atoms");
  }
  std::vector<Rational> weights(tgt_field.atom_count(), Rational(0));
  for (AtomIndex a = 0; a < src.atom_count(); ++a) {
    // Measurability puts the whole source atom inside one target atom.
    weights[tgt_field.atom_of(map(src.atom(a).front()))] += mu.weight(a);
  }
  return FiniteMeasure::unchecked(map.target().with_field(tgt_field),
                                  std::move(weights));
}

FiniteMeasure marginal(const FiniteMeasure& mu,
                       std::span<const std::size_t> kept) {
  const FiniteMeasurableSpace& base = mu.base();
  if (!base.is_product()) {
    throw Error(ErrorCode::NotAProduct, "marginal of a non-product measure");
  }
  const auto& factors = base.factors();
  if (kept.empty()) {
    throw Error(ErrorCode::BadCoordinate, "no coordinates kept");
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (kept[k] >= factors.size() || (k && kept[k] <= kept[k - 1])) {
      throw Error(ErrorCode::BadCoordinate,
                  "coordinate list must be ascending indices below " +
                      std::to_string(factors.size()));
    }
  }
  if (kept.size() == factors.size()) return mu;

  std::vector<FiniteMeasurableSpace> kept_factors;
  std::vector<std::size_t> kept_extents;
  for (std::size_t c : kept) {
    kept_factors.push_back(factors[c]);
    kept_extents.push_back(factors[c].field().atom_count());
  }
  FiniteMeasurableSpace target = kept_factors.size() == 1
                                     ? kept_factors.front()
                                     : product_space(kept_factors);

  std::vector<std::size_t> atom_extents;
  for (const auto& f : factors) atom_extents.push_back(f.field().atom_count());
  std::vector<Rational> weights(target.field().atom_count(), Rational(0));
  for (AtomIndex a = 0; a < mu.weights().size(); ++a) {
    const auto coords = unflatten(a, atom_extents);
    std::vector<std::size_t> sub;
    for (std::size_t c : kept) sub.push_back(coords[c]);
    weights[flatten(sub, kept_extents)] += mu.weight(a);
  }
  return FiniteMeasure::unchecked(std::move(target), std::move(weights));
}

Rational measure_of(const FiniteMeasure& mu, const PointSet& set) {
  const Partition& field = mu.base().field();
  if (auto fragment = field.cut_fragment(set)) {
    throw Error(ErrorCode::NotMeasurableSet,
                "set cuts an atom in fragment " +
                    describe(mu.base(), *fragment));
  }
  Rational sum = 0;
  for (AtomIndex a : field.atoms_in(set)) sum += mu.weight(a);
  return sum;
}

bool belief_event_contains(const FiniteMeasure& mu, const PointSet& set,
                           const Rational& p) {
  if (p < 0 || p > 1) {
    throw Error(ErrorCode::BadProbability,
                "threshold " + to_string(p) + " outside [0,1]");
  }
  return measure_of(mu, set) >= p;
}

}  // namespace tspace
