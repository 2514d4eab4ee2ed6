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

#include "tspace/simplex.hpp"

#include <cstddef>

#include "tspace/error.hpp"

namespace tspace {

std::optional<std::vector<Rational>> feasible_point(
    const std::vector<std::vector<Rational>>& rows,
    const std::vector<Rational>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) {
    throw Error(ErrorCode::CarrierMismatch, "rhs length differs from row count");
  }
  const std::size_t n = m ? rows.front().size() : 0;
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorCode::CarrierMismatch, "ragged constraint matrix");
    }
  }
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Columns: n original, m artificial, then the right-hand side.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -rows[i][j] : rows[i][j];
    t[i][n + i] = 1;
    t[i][cols] = flip ? -rhs[i] : rhs[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[cols] -= t[i][cols];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so a ratio row always exists.
    if (leave == m) break;

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols];
  }
  return x;
}

}  // namespace tspace
