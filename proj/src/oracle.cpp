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

#include "fatalpoint/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

#include "fatalpoint/error.hpp"

namespace fatalpoint::oracle {

std::pair<std::int32_t, std::size_t> brute_force_mode(
    std::span<const LogicalLongitude> values) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "mode of nothing");
  std::int32_t best_key = 0;
  std::size_t best_count = 0;
  for (const auto& candidate : values) {
    std::size_t count = 0;
    for (const auto& v : values) {
      if (v.hundredths == candidate.hundredths) ++count;
    }
    if (count > best_count ||
        (count == best_count && candidate.hundredths < best_key)) {
      best_key = candidate.hundredths;
      best_count = count;
    }
  }
  return {best_key, best_count};
}

namespace {

double partition_cost(std::span<const Point2D> points,
                      const std::vector<std::size_t>& label, std::size_t blocks) {
  double cost = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    double sx = 0.0, sy = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (label[i] == b) {
        sx += points[i].x;
        sy += points[i].y;
        ++n;
      }
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (label[i] == b) {
        cost += (points[i].x - mx) * (points[i].x - mx) +
                (points[i].y - my) * (points[i].y - my);
      }
    }
  }
  return cost;
}

// Walks restricted growth strings: label[0] = 0 and each label is at most one
// more than the largest label before it, capped at k - 1.
void enumerate(std::span<const Point2D> points, std::size_t k,
               std::vector<std::size_t>& label, std::size_t pos,
               std::size_t blocks, double& best) {
  if (pos == points.size()) {
    const double cost = partition_cost(points, label, blocks);
    if (cost < best) best = cost;
    return;
  }
  const std::size_t limit = std::min(blocks + 1, k);
  for (std::size_t b = 0; b < limit; ++b) {
    label[pos] = b;
    enumerate(points, k, label, pos + 1, b == blocks ? blocks + 1 : blocks, best);
  }
}

}  // namespace

double brute_force_kmeans(std::span<const Point2D> points, std::size_t k) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (points.size() > kMaxEnumerationPoints) {
    throw Error(ErrorKind::OracleScope,
                std::to_string(points.size()) + " points exceed the enumeration bound of " +
                    std::to_string(kMaxEnumerationPoints));
  }
  std::vector<std::size_t> label(points.size(), 0);
  double best = std::numeric_limits<double>::infinity();
  enumerate(points, k, label, 1, 1, best);
  return best;
}

}  // namespace fatalpoint::oracle
