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

// Lloyd's k-means over raw (longitude, latitude) degrees. Squared Euclidean
// distance in degree space; no projection.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fatalpoint/ingest.hpp"

namespace fatalpoint {

struct Point2D {
  double x = 0.0;  // longitude
  double y = 0.0;  // latitude

  bool operator==(const Point2D&) const = default;
  auto operator<=>(const Point2D&) const = default;
};

inline double squared_distance(Point2D a, Point2D b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

enum class Seeding { KMeansPlusPlus, UniformRandom };

struct KMeansParams {
  std::size_t k = 1;
  std::uint64_t rng_seed = 20150101;
  std::size_t max_iterations = 300;
  double convergence_tol = 1e-7;  // max centroid shift, degrees
  std::size_t restarts = 10;
  Seeding seeding = Seeding::KMeansPlusPlus;
};

struct Cluster {
  std::size_t id = 0;                // 1-based after canonical ordering
  std::vector<std::size_t> members;  // ascending point indices
  Point2D centroid;

  std::size_t frequency() const noexcept { return members.size(); }
};

struct ClusterDomain {
  std::size_t k = 0;
  std::vector<Cluster> clusters;  // ordered by id
  KMeansParams params;
  std::size_t iterations_used = 0;
  double wcss = 0.0;
  std::size_t best_restart = 0;
  std::vector<double> wcss_trace;  // per-iteration objective of the kept run
};

/// Called after every Lloyd iteration of every restart with the objective
/// reached by that iteration.
using IterationObserver =
    std::function<void(std::size_t restart, std::size_t iteration, double wcss)>;

std::vector<Point2D> to_points(std::span<const CrashRecord> records);

std::size_t count_distinct(std::span<const Point2D> points);

/// k distinct initial centroids drawn with params.seeding from an Rng seeded
/// with params.rng_seed. Throws InfeasibleK when k exceeds the number of
/// distinct points.
std::vector<Point2D> seed_centroids(std::span<const Point2D> points,
                                    const KMeansParams& params);

/// Index (0-based) of the nearest centroid; ties go to the lowest index.
std::size_t assign_point(Point2D p, std::span<const Point2D> centroids);

/// Best of params.restarts Lloyd runs by WCSS (earliest restart wins ties).
/// Clusters come back sorted by centroid longitude, then latitude, and are
/// numbered 1..k. Empty clusters are refilled with the point farthest from
/// its centroid, so every cluster has at least one member.
ClusterDomain run_kmeans(std::span<const Point2D> points,
                         const KMeansParams& params,
                         const IterationObserver& observer = {});

double wcss(std::span<const Point2D> points, const ClusterDomain& domain);

}  // namespace fatalpoint
