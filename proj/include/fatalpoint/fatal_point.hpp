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

// Fatal point detection: bin a cluster's longitudes into 0.01-degree vertical
// strips and take the most populated strip.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fatalpoint/ingest.hpp"
#include "fatalpoint/kmeans.hpp"

namespace fatalpoint {

/// A longitude rounded to hundredths of a degree, kept as an integer key.
struct LogicalLongitude {
  std::int32_t hundredths = 0;

  double degrees() const noexcept { return hundredths / 100.0; }
  auto operator<=>(const LogicalLongitude&) const = default;
};

struct SegmentHistogram {
  std::size_t cluster_id = 0;
  std::map<std::int32_t, std::size_t> counts;  // bin key -> members

  std::size_t total() const noexcept;
};

struct FatalPoint {
  std::size_t cluster_id = 0;
  LogicalLongitude bin;
  std::size_t frequency = 0;     // f_sc
  std::vector<Point2D> members;  // sorted by (longitude, latitude)
  Point2D representative;        // members.front()
};

/// Rounds half away from zero on the decimal value of `longitude` (its
/// shortest round-trip text), so -78.675 maps to -7868 even though the binary
/// double sits just below the tie. Throws InvalidArgument on non-finite input
/// or |longitude| > 180.
LogicalLongitude bin_longitude(double longitude);

SegmentHistogram segment_histogram(std::span<const CrashRecord> members,
                                   std::size_t cluster_id = 0);

/// Mode of the histogram; the smallest (westernmost) key wins ties.
FatalPoint detect_fatal_point(std::size_t cluster_id,
                              std::span<const CrashRecord> members);

/// `records` is the full record set the cluster's member indices refer to.
FatalPoint detect_fatal_point(const Cluster& cluster,
                              std::span<const CrashRecord> records);

std::vector<FatalPoint> detect_fatal_points(const ClusterDomain& domain,
                                            std::span<const CrashRecord> records);

}  // namespace fatalpoint
