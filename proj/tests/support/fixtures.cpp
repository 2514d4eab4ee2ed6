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

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace tspace::testing {
namespace {

using Weights = std::vector<std::vector<std::vector<Rational>>>;

FiniteMeasurableSpace two_parameters() {
  return FiniteMeasurableSpace::discrete({"s1", "s2"});
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n,
                                  std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k + first));
  return out;
}

std::size_t minus_atom_count(const TypeSpace::Parts& parts, PlayerIndex i) {
  std::vector<Partition> joined{parts.nature_field};
  for (PlayerIndex j = 0; j < parts.player_fields.size(); ++j) {
    if (j != i) joined.push_back(parts.player_fields[j]);
  }
  return sigma_join(joined).atom_count();
}

// d units spread over a random nonempty subset of the atoms.
std::vector<Rational> random_distribution(std::mt19937_64& rng, std::size_t atoms,
                                          unsigned max_denominator) {
  std::vector<std::size_t> order(atoms);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t support = uniform(rng, 1, atoms);
  const std::size_t d = uniform(rng, 1, max_denominator);
  std::vector<std::size_t> units(atoms, 0);
  for (std::size_t k = 0; k < d; ++k) ++units[order[uniform(rng, 0, support - 1)]];
  std::vector<Rational> out;
  for (std::size_t u : units) out.emplace_back(static_cast<long>(u), static_cast<long>(d));
  return out;
}

}  // namespace

TypeSpace case1() {
  TypeSpace::Parts parts;
  parts.parameters = two_parameters();
  parts.players = {"1", "2"};
  parts.states = {"w1", "w2"};
  parts.nature_field = Partition::discrete(2);
  parts.player_fields = {Partition::discrete(2), Partition::discrete(2)};
  parts.nature_map = {0, 1};
  const std::vector<Rational> certain_w2{0, 1};
  return TypeSpace::make(std::move(parts),
                         Weights{{certain_w2, certain_w2}, {certain_w2, certain_w2}});
}

TypeSpace case2() {
  TypeSpace::Parts parts;
  parts.parameters = two_parameters();
  parts.players = {"1", "2"};
  parts.states = {"w"};
  parts.nature_field = Partition::trivial(1);
  parts.player_fields = {Partition::trivial(1), Partition::trivial(1)};
  parts.nature_map = {1};
  return TypeSpace::make(std::move(parts), Weights{{{1}}, {{1}}});
}

TypeSpace case3f() {
  TypeSpace::Parts parts;
  parts.parameters = two_parameters();
  parts.players = {"1", "2"};
  std::vector<std::size_t> by_s, by_t1, by_t2;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t1 = 0; t1 < 2; ++t1) {
      for (std::size_t t2 = 0; t2 < 2; ++t2) {
        parts.states.push_back("s" + std::to_string(s + 1) + "_" +
                               std::to_string(t1) + "_" + std::to_string(t2));
        by_s.push_back(s);
        by_t1.push_back(t1);
        by_t2.push_back(t2);
        parts.nature_map.push_back(s);
      }
    }
  }
  parts.nature_field = Partition::from_keys(by_s);
  parts.player_fields = {Partition::from_keys(by_t1), Partition::from_keys(by_t2)};
  // M_{-i} atoms: (s1,0), (s1,1), (s2,0), (s2,1) over the opponent's type.
  // Type x puts x on (s1, opponent 1) and 1-x on (s2, opponent 1).
  const std::vector<Rational> type0{0, 0, 0, 1};
  const std::vector<Rational> type1{0, 1, 0, 0};
  return TypeSpace::make(std::move(parts), Weights{{type0, type1}, {type0, type1}});
}

BayesianGame paper_game(const TypeSpace& space) {
  using P = std::vector<Rational>;
  const FiniteMeasurableSpace& params = space.parameters();
  BayesianGame::Parts parts{space, {{"U", "D"}, {"L", "R"}}, {}};
  parts.payoffs.resize(params.size() * 4);
  // Profiles in order U,L  U,R  D,L  D,R.
  const std::vector<P> s1{{2, 3}, {4, 2}, {3, 4}, {5, 5}};
  const std::vector<P> s2{{4, 5}, {3, 4}, {5, 3}, {2, 2}};
  for (PointIndex s = 0; s < params.size(); ++s) {
    const auto& table = params.label(s) == "s1" ? s1 : s2;
    for (std::size_t p = 0; p < 4; ++p) parts.payoffs[s * 4 + p] = table[p];
  }
  return BayesianGame::make(std::move(parts));
}

std::string fixture_path(const std::string& name) {
  return std::string(TSPACE_FIXTURE_DIR) + "/" + name;
}

Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  const std::size_t blocks = uniform(rng, 1, n);
  std::vector<std::size_t> key(n);
  for (auto& k : key) k = uniform(rng, 0, blocks - 1);
  return Partition::from_keys(key);
}

FiniteMeasurableSpace random_parameters(std::mt19937_64& rng, std::size_t max_points) {
  const std::size_t n = uniform(rng, 1, max_points);
  return FiniteMeasurableSpace::make(numbered("s", n), random_partition(rng, n));
}

TypeSpace random_type_space(std::mt19937_64& rng,
                            const FiniteMeasurableSpace& parameters,
                            const RandomSpaceOptions& options) {
  const std::size_t n = uniform(rng, 1, options.max_states);
  const std::size_t players =
      options.players ? options.players : uniform(rng, 1, options.max_players);
  TypeSpace::Parts parts;
  parts.parameters = parameters;
  parts.players = numbered("", players);
  parts.states = numbered("w", n);
  parts.nature_field = random_partition(rng, n);
  for (std::size_t i = 0; i < players; ++i) {
    parts.player_fields.push_back(random_partition(rng, n));
  }
  // g lands in one S-atom per M_0-atom, at any point of that S-atom.
  const Partition& s_field = parameters.field();
  std::vector<AtomIndex> atom_choice(parts.nature_field.atom_count());
  for (auto& a : atom_choice) a = uniform(rng, 0, s_field.atom_count() - 1);
  for (PointIndex w = 0; w < n; ++w) {
    const PointSet& atom = s_field.atom(atom_choice[parts.nature_field.atom_of(w)]);
    parts.nature_map.push_back(atom[uniform(rng, 0, atom.size() - 1)]);
  }
  Weights weights(players);
  for (PlayerIndex i = 0; i < players; ++i) {
    const std::size_t atoms = minus_atom_count(parts, i);
    for (std::size_t t = 0; t < parts.player_fields[i].atom_count(); ++t) {
      weights[i].push_back(random_distribution(rng, atoms, options.max_denominator));
    }
  }
  return TypeSpace::make(std::move(parts), weights);
}

TypeSpace random_type_space(std::mt19937_64& rng, const RandomSpaceOptions& options) {
  return random_type_space(rng, random_parameters(rng, options.max_parameters),
                           options);
}

BayesianGame random_game(std::mt19937_64& rng, const TypeSpace& space,
                         std::size_t max_actions) {
  BayesianGame::Parts parts{space, {}, {}};
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < space.player_count(); ++i) {
    const std::size_t k = uniform(rng, 1, max_actions);
    parts.actions.push_back(numbered("a", k, 0));
    profiles *= k;
  }
  const FiniteMeasurableSpace& params = space.parameters();
  std::vector<std::vector<Rational>> by_atom(params.field().atom_count() * profiles);
  for (auto& entry : by_atom) {
    for (std::size_t i = 0; i < space.player_count(); ++i) {
      entry.emplace_back(static_cast<long>(uniform(rng, 0, 8)) - 3);
    }
  }
  parts.payoffs.resize(params.size() * profiles);
  for (PointIndex s = 0; s < params.size(); ++s) {
    for (std::size_t p = 0; p < profiles; ++p) {
      parts.payoffs[s * profiles + p] = by_atom[params.field().atom_of(s) * profiles + p];
    }
  }
  return BayesianGame::make(std::move(parts));
}

TypeSpace disjoint_union(const TypeSpace& a, const TypeSpace& b) {
  const std::size_t na = a.state_count();
  const std::size_t n = na + b.state_count();
  auto merge = [&](const Partition& pa, const Partition& pb) {
    std::vector<std::vector<PointIndex>> atoms = pa.atoms();
    for (const PointSet& atom : pb.atoms()) {
      std::vector<PointIndex> shifted;
      for (PointIndex p : atom) shifted.push_back(p + na);
      atoms.push_back(std::move(shifted));
    }
    return Partition::from_atoms(n, std::move(atoms));
  };
  TypeSpace::Parts parts;
  parts.parameters = a.parameters();
  parts.players = a.players();
  for (const auto& w : a.states()) parts.states.push_back("a." + w);
  for (const auto& w : b.states()) parts.states.push_back("b." + w);
  parts.nature_field = merge(a.nature_field(), b.nature_field());
  for (PlayerIndex i = 0; i < a.player_count(); ++i) {
    parts.player_fields.push_back(merge(a.field(i), b.field(i)));
  }
  parts.nature_map = a.nature_assignment();
  for (PointIndex s : b.nature_assignment()) parts.nature_map.push_back(s);
  // M_{-i} of the union lists a's atoms before b's, in their own orders.
  Weights weights(a.player_count());
  for (PlayerIndex i = 0; i < a.player_count(); ++i) {
    const std::size_t ma = a.minus_field(i).atom_count();
    const std::size_t mb = b.minus_field(i).atom_count();
    for (AtomIndex t = 0; t < a.type_count(i); ++t) {
      auto row = a.belief(i, t).weights();
      row.resize(ma + mb, Rational(0));
      weights[i].push_back(std::move(row));
    }
    for (AtomIndex t = 0; t < b.type_count(i); ++t) {
      std::vector<Rational> row(ma, Rational(0));
      for (const Rational& w : b.belief(i, t).weights()) row.push_back(w);
      weights[i].push_back(std::move(row));
    }
  }
  return TypeSpace::make(std::move(parts), weights);
}

}  // namespace tspace::testing
