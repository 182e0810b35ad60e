// Copyright 2026 The fatalpoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force reference answers for small instances. Deliberately naive and
// independent of the production code paths; linked only into tests.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "fatalpoint/fatal_point.hpp"
#include "fatalpoint/kmeans.hpp"

namespace fatalpoint::oracle {

/// Largest bin by pairwise counting; smallest key on ties.
/// Throws EmptyInput for an empty list.
std::pair<std::int32_t, std::size_t> brute_force_mode(
    std::span<const LogicalLongitude> values);

inline constexpr std::size_t kMaxEnumerationPoints = 10;

/// Minimum WCSS over every partition of `points` into at most k non-empty
/// groups. Throws OracleScope above kMaxEnumerationPoints points.
double brute_force_kmeans(std::span<const Point2D> points, std::size_t k);

}  // namespace fatalpoint::oracle
