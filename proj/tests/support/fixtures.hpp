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

// Hand-built versions of the shipped fixture files, used to cross-check
// the parser and as inputs to unit tests.

#ifndef TSPACE_TESTS_FIXTURES_HPP_
#define TSPACE_TESTS_FIXTURES_HPP_

#include <random>
#include <string>

#include "tspace/game.hpp"
#include "tspace/type_space.hpp"

namespace tspace::testing {

// S = {s1, s2}; two states w1=(s1,t1,t2), w2=(s2,t1,t2); every field is
// discrete; both players are certain of w2.
TypeSpace case1();
// One state w with g(w) = s2; every field trivial.
TypeSpace case2();
// Finite stand-in for the continuum example: types {0,1} per player,
// states (s, t1, t2); a type x believes s1 with probability x and that the
// opponent has type 1.
TypeSpace case3f();

// The two payoff tables (one per state of nature) on top of a space.
BayesianGame paper_game(const TypeSpace& space);

std::string fixture_path(const std::string& name);

struct RandomSpaceOptions {
  std::size_t max_states = 8;
  std::size_t max_players = 3;
  std::size_t players = 0;  // fixed player count; 0 draws one
  std::size_t max_parameters = 3;
  unsigned max_denominator = 12;
};

Partition random_partition(std::mt19937_64& rng, std::size_t n);
FiniteMeasurableSpace random_parameters(std::mt19937_64& rng, std::size_t max_points);
// A valid type space over the given parameter space.
TypeSpace random_type_space(std::mt19937_64& rng,
                            const FiniteMeasurableSpace& parameters,
                            const RandomSpaceOptions& options = {});
TypeSpace random_type_space(std::mt19937_64& rng,
                            const RandomSpaceOptions& options = {});
// Payoffs constant on S-atoms, small integers.
BayesianGame random_game(std::mt19937_64& rng, const TypeSpace& space,
                         std::size_t max_actions = 3);

// Side-by-side union: states of `a` then states of `b` (labels prefixed
// "a." / "b."), fields and beliefs carried over with zero mass across.
TypeSpace disjoint_union(const TypeSpace& a, const TypeSpace& b);

}  // namespace tspace::testing

#endif  // TSPACE_TESTS_FIXTURES_HPP_
