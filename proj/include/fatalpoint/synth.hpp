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

// Deterministic synthetic crash locations: Gaussian blobs around cities plus
// jittered points along highway corridors, kept inside a bounding box.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fatalpoint/ingest.hpp"
#include "fatalpoint/kmeans.hpp"

namespace fatalpoint {

struct BoundingBox {
  double lon_min = -84.5;
  double lon_max = -75.5;
  double lat_min = 33.8;
  double lat_max = 36.6;

  bool contains(Point2D p) const noexcept {
    return p.x >= lon_min && p.x <= lon_max && p.y >= lat_min && p.y <= lat_max;
  }
};

struct Corridor {
  Point2D from;
  Point2D to;
  double intensity = 1.0;  // relative mixture weight
};

struct SynthConfig {
  std::uint64_t seed = 20150101;
  std::size_t n_points = 1263;
  std::vector<Point2D> blob_centers;
  double blob_weight = 1.0;      // mixture weight of each blob
  double blob_stddev = 0.15;     // degrees
  std::vector<Corridor> corridor_segments;
  double corridor_stddev = 0.03; // perpendicular jitter, degrees
  BoundingBox box;
  int decimals = 4;              // coordinate rounding; negative keeps all digits

  /// Three city blobs and two east-west corridors over North Carolina.
  static SynthConfig north_carolina();
};

/// Throws Config when the mixture has no components or a component keeps
/// landing outside the box, InvalidArgument when n_points == 0.
std::vector<CrashRecord> generate(const SynthConfig& config);

}  // namespace fatalpoint
