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

#ifndef TSPACE_SIMPLEX_HPP_
#define TSPACE_SIMPLEX_HPP_

#include <optional>
#include <vector>

#include "tspace/rational.hpp"

namespace tspace {

// Exact phase-one simplex (Bland's rule, so it terminates): returns some
// x >= 0 with rows * x == rhs, or nullopt when the system is infeasible.
// Every row must have the same length.
std::optional<std::vector<Rational>> feasible_point(
    const std::vector<std::vector<Rational>>& rows,
    const std::vector<Rational>& rhs);

}  // namespace tspace

#endif  // TSPACE_SIMPLEX_HPP_
