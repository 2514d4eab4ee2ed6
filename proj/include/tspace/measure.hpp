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

// Finite measurable spaces, sigma-fields as atom partitions, and exact
// probability measures over them.
//
// On a finite carrier every sigma-field is generated by its atoms, so a
// field is stored as the partition of the carrier into those atoms. A set
// is measurable iff it is a union of atoms. Measures carry one weight per
// atom.

#ifndef TSPACE_MEASURE_HPP_
#define TSPACE_MEASURE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tspace/rational.hpp"

namespace tspace {

using PointIndex = std::size_t;
using AtomIndex = std::size_t;

// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<PointIndex>;

PointSet make_point_set(std::vector<PointIndex> points);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);
PointSet full_set(std::size_t carrier_size);

class Partition {
 public:
  Partition() = default;

  // Atoms keep the given order. Throws NotAPartition naming the first
  // offending atom (by position) if atoms overlap, are empty, or fail to
  // cover [0, carrier_size).
  static Partition from_atoms(std::size_t carrier_size,
                              std::vector<std::vector<PointIndex>> atoms);
  static Partition discrete(std::size_t carrier_size);
  static Partition trivial(std::size_t carrier_size);
  // Groups points with equal keys; atoms are ordered by first occurrence.
  static Partition from_keys(std::span<const std::size_t> key_of_point);

  std::size_t carrier_size() const { return atom_of_.size(); }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<PointSet>& atoms() const { return atoms_; }
  const PointSet& atom(AtomIndex a) const { return atoms_.at(a); }
  AtomIndex atom_of(PointIndex p) const { return atom_of_.at(p); }

  bool is_measurable(const PointSet& set) const;
  // First atom that `set` cuts (atom intersect set), if any.
  std::optional<PointSet> cut_fragment(const PointSet& set) const;
  // Atom indices whose union is `set`; requires is_measurable(set).
  std::vector<AtomIndex> atoms_in(const PointSet& set) const;

  // True when every atom of *this lies inside one atom of `coarser`.
  bool refines(const Partition& coarser) const;
  // Same atoms as sets, order ignored.
  bool same_atoms(const Partition& other) const;
  // Atoms reordered by smallest member.
  Partition canonical() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<PointSet> atoms_;
  std::vector<AtomIndex> atom_of_;
};

// Common refinement (coarsest partition refining every input), atoms in
// canonical order. Throws CarrierMismatch, or BadCoordinate on empty input.
Partition sigma_join(std::span<const Partition> fields);

class FiniteMeasurableSpace {
 public:
  FiniteMeasurableSpace();

  // Throws DuplicateLabel or NotAPartition.
  static FiniteMeasurableSpace make(
      std::vector<std::string> points,
      const std::vector<std::vector<std::string>>& atoms);
  static FiniteMeasurableSpace make(std::vector<std::string> points,
                                    Partition field);
  static FiniteMeasurableSpace discrete(std::vector<std::string> points);

  // Same carrier, different field. Throws CarrierMismatch.
  FiniteMeasurableSpace with_field(Partition field) const;

  std::size_t size() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(PointIndex p) const { return data_->labels.at(p); }
  std::optional<PointIndex> find(std::string_view label) const;
  // Throws UnknownPoint.
  PointIndex index_of(std::string_view label) const;
  PointSet to_set(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const PointSet& set) const;
  // Atom rendered as its member labels joined with '+'.
  std::string atom_label(AtomIndex a) const;

  const Partition& field() const { return data_->field; }

  bool is_product() const { return !data_->factors.empty(); }
  const std::vector<FiniteMeasurableSpace>& factors() const {
    return data_->factors;
  }

  bool same_carrier(const FiniteMeasurableSpace& other) const;
  friend bool operator==(const FiniteMeasurableSpace& a,
                         const FiniteMeasurableSpace& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, PointIndex> index;
    Partition field;
    std::vector<FiniteMeasurableSpace> factors;
  };
  explicit FiniteMeasurableSpace(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}
  static std::shared_ptr<Data> build(std::vector<std::string> points);

  friend FiniteMeasurableSpace product_space(
      std::span<const FiniteMeasurableSpace> factors);

  std::shared_ptr<const Data> data_;
};

// Carrier is the Cartesian product (row-major, first factor slowest); atoms
// are products of atoms. Products of products are flattened so factors()
// lists every coordinate.
FiniteMeasurableSpace product_space(const FiniteMeasurableSpace& x,
                                    const FiniteMeasurableSpace& y);
FiniteMeasurableSpace product_space(
    std::span<const FiniteMeasurableSpace> factors);

class MeasurableMap {
 public:
  // Throws UnknownPoint if an image is out of range or the size is wrong.
  static MeasurableMap make(FiniteMeasurableSpace domain,
                            FiniteMeasurableSpace target,
                            std::vector<PointIndex> assignment);

  const FiniteMeasurableSpace& domain() const { return domain_; }
  const FiniteMeasurableSpace& target() const { return target_; }
  const std::vector<PointIndex>& assignment() const { return assignment_; }
  PointIndex operator()(PointIndex p) const { return assignment_.at(p); }

  PointSet preimage(const PointSet& target_set) const;
  PointSet image(const PointSet& domain_set) const;

  friend bool operator==(const MeasurableMap& a, const MeasurableMap& b) {
    return a.assignment_ == b.assignment_ && a.domain_ == b.domain_ &&
           a.target_ == b.target_;
  }

 private:
  MeasurableMap(FiniteMeasurableSpace domain, FiniteMeasurableSpace target,
                std::vector<PointIndex> assignment)
      : domain_(std::move(domain)),
        target_(std::move(target)),
        assignment_(std::move(assignment)) {}

  FiniteMeasurableSpace domain_;
  FiniteMeasurableSpace target_;
  std::vector<PointIndex> assignment_;
};

// outer(inner(x)). Throws CarrierMismatch if inner's target is not outer's
// domain carrier.
MeasurableMap compose(const MeasurableMap& outer, const MeasurableMap& inner);

// Coarsest field on the domain making `map` measurable w.r.t. the target's
// field: preimages of target atoms, empty ones dropped.
Partition induced_field(const MeasurableMap& map);

struct MeasurabilityCheck {
  bool measurable = true;
  // On failure: a target-measurable set whose preimage is not measurable,
  // and that preimage.
  PointSet witness;
  PointSet preimage;
};

// Throws CarrierMismatch when the fields do not live on the map's carriers.
MeasurabilityCheck is_measurable(const MeasurableMap& map,
                                 const Partition& src_field,
                                 const Partition& tgt_field);

class FiniteMeasure {
 public:
  // Empty measure on the empty space; a placeholder only.
  FiniteMeasure() = default;

  // Throws CarrierMismatch on a wrong weight count, NotAProbability when a
  // weight is negative or the total is not exactly 1.
  static FiniteMeasure make(FiniteMeasurableSpace base,
                            std::vector<Rational> weights);
  // No probability check. Used to represent defective input so that
  // validators can report on it.
  static FiniteMeasure unchecked(FiniteMeasurableSpace base,
                                 std::vector<Rational> weights);

  const FiniteMeasurableSpace& base() const { return base_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(AtomIndex a) const { return weights_.at(a); }
  Rational total() const;
  bool is_probability() const;
  std::vector<AtomIndex> support() const;

  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
    return a.weights_ == b.weights_ && a.base_ == b.base_;
  }

 private:
  FiniteMeasure(FiniteMeasurableSpace base, std::vector<Rational> weights)
      : base_(std::move(base)), weights_(std::move(weights)) {}

  FiniteMeasurableSpace base_;
  std::vector<Rational> weights_;
};

// Throws UnknownPoint.
FiniteMeasure dirac(const FiniteMeasurableSpace& space, std::string_view point);
FiniteMeasure dirac(const FiniteMeasurableSpace& space, PointIndex point);

FiniteMeasure product_measure(const FiniteMeasure& mu, const FiniteMeasure& nu);

// result(B) = mu(map^{-1}(B)) on (map.target(), tgt_field). Throws
// CarrierMismatch, or NotMeasurable naming the offending target set.
FiniteMeasure pushforward(const FiniteMeasure& mu, const MeasurableMap& map,
                          const Partition& tgt_field);

// Restriction of a measure on a product space to the listed coordinates
// (ascending, distinct). Throws NotAProduct, BadCoordinate.
FiniteMeasure marginal(const FiniteMeasure& mu,
                       std::span<const std::size_t> kept);

// Throws NotMeasurableSet with the cut atom fragment.
Rational measure_of(const FiniteMeasure& mu, const PointSet& set);

// mu(A) >= p. Throws NotMeasurableSet, BadProbability.
bool belief_event_contains(const FiniteMeasure& mu, const PointSet& set,
                           const Rational& p);

}  // namespace tspace

#endif  // TSPACE_MEASURE_HPP_
