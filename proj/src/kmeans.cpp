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

#include "fatalpoint/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fatalpoint/error.hpp"
#include "fatalpoint/random.hpp"

namespace fatalpoint {

namespace {

struct LloydRun {
  std::vector<std::size_t> labels;
  std::vector<Point2D> centroids;
  std::vector<double> trace;
  std::size_t iterations = 0;
  double wcss = 0.0;
};

std::vector<Point2D> distinct_points(std::span<const Point2D> points) {
  std::vector<Point2D> d(points.begin(), points.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

void check_feasible(std::span<const Point2D> points, std::size_t k) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points to cluster");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::InvalidArgument, "non-finite point coordinate");
    }
  }
  const auto distinct = count_distinct(points);
  if (k > distinct) {
    throw Error(ErrorKind::InfeasibleK,
                "k=" + std::to_string(k) + " exceeds the " +
                    std::to_string(distinct) + " distinct locations");
  }
}

std::vector<Point2D> seed_plus_plus(std::span<const Point2D> points,
                                    std::span<const Point2D> distinct,
                                    std::size_t k, random::Rng& rng) {
  std::vector<Point2D> seeds;
  seeds.reserve(k);
  seeds.push_back(points[rng.below(points.size())]);

  std::vector<double> weight(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    weight[i] = squared_distance(points[i], seeds[0]);
  }
  while (seeds.size() < k) {
    double total = 0.0;
    for (double w : weight) total += w;

    std::size_t pick = points.size();
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double cumulative = 0.0;
      std::size_t last_positive = points.size();
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (weight[i] <= 0.0) continue;
        last_positive = i;
        cumulative += weight[i];
        if (cumulative > target) {
          pick = i;
          break;
        }
      }
      if (pick == points.size()) pick = last_positive;
    }

    Point2D next;
    if (pick < points.size()) {
      next = points[pick];
    } else {
      // Distances underflowed; take the first distinct point not yet chosen.
      auto it = std::find_if(distinct.begin(), distinct.end(), [&](Point2D p) {
        return std::find(seeds.begin(), seeds.end(), p) == seeds.end();
      });
      next = *it;
    }
    seeds.push_back(next);
    for (std::size_t i = 0; i < points.size(); ++i) {
      weight[i] = std::min(weight[i], squared_distance(points[i], next));
    }
  }
  return seeds;
}

std::vector<Point2D> seed_uniform(std::span<const Point2D> distinct,
                                  std::size_t k, random::Rng& rng) {
  std::vector<Point2D> pool(distinct.begin(), distinct.end());
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Point2D> seed_with(std::span<const Point2D> points, std::size_t k,
                               Seeding seeding, random::Rng& rng) {
  const auto distinct = distinct_points(points);
  if (seeding == Seeding::UniformRandom) return seed_uniform(distinct, k, rng);
  return seed_plus_plus(points, distinct, k, rng);
}

std::vector<Point2D> member_means(std::span<const Point2D> points,
                                  std::span<const std::size_t> labels,
                                  std::span<const Point2D> fallback) {
  const std::size_t k = fallback.size();
  std::vector<double> sx(k, 0.0), sy(k, 0.0);
  std::vector<std::size_t> count(k, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    sx[labels[i]] += points[i].x;
    sy[labels[i]] += points[i].y;
    ++count[labels[i]];
  }
  std::vector<Point2D> means(fallback.begin(), fallback.end());
  for (std::size_t c = 0; c < k; ++c) {
    if (count[c] > 0) {
      means[c] = {sx[c] / static_cast<double>(count[c]),
                  sy[c] / static_cast<double>(count[c])};
    }
  }
  return means;
}

double objective(std::span<const Point2D> points,
                 std::span<const std::size_t> labels,
                 std::span<const Point2D> centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += squared_distance(points[i], centroids[labels[i]]);
  }
  return total;
}

// Moves the point farthest from its current centroid into each empty
// cluster. Donor clusters must keep at least one member.
void repair_empty(std::span<const Point2D> points,
                  std::vector<std::size_t>& labels,
                  std::span<const Point2D> centroids) {
  const std::size_t k = centroids.size();
  std::vector<std::size_t> count(k, 0);
  for (auto l : labels) ++count[l];
  for (std::size_t c = 0; c < k; ++c) {
    if (count[c] > 0) continue;
    std::size_t farthest = points.size();
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (count[labels[i]] < 2) continue;
      const double d = squared_distance(points[i], centroids[labels[i]]);
      if (d > best) {
        best = d;
        farthest = i;
      }
    }
    // k <= distinct points <= n guarantees a donor exists.
    --count[labels[farthest]];
    labels[farthest] = c;
    count[c] = 1;
  }
}

LloydRun lloyd(std::span<const Point2D> points, std::vector<Point2D> centroids,
               const KMeansParams& params, std::size_t restart,
               const IterationObserver& observer) {
  LloydRun run;
  run.labels.assign(points.size(), 0);
  const std::size_t iterations = std::max<std::size_t>(params.max_iterations, 1);
  for (std::size_t iter = 1; iter <= iterations; ++iter) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      run.labels[i] = assign_point(points[i], centroids);
    }
    repair_empty(points, run.labels, centroids);
    auto updated = member_means(points, run.labels, centroids);

    double shift = 0.0;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      shift = std::max(shift, std::sqrt(squared_distance(centroids[c], updated[c])));
    }
    centroids = std::move(updated);
    run.wcss = objective(points, run.labels, centroids);
    run.trace.push_back(run.wcss);
    run.iterations = iter;
    if (observer) observer(restart, iter, run.wcss);
    if (shift <= params.convergence_tol) break;
  }
  run.centroids = std::move(centroids);
  return run;
}

ClusterDomain finalize(const LloydRun& run, const KMeansParams& params,
                       std::size_t restart) {
  const std::size_t k = run.centroids.size();
  std::vector<Cluster> clusters(k);
  for (std::size_t c = 0; c < k; ++c) clusters[c].centroid = run.centroids[c];
  for (std::size_t i = 0; i < run.labels.size(); ++i) {
    clusters[run.labels[i]].members.push_back(i);
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              if (a.centroid.x != b.centroid.x) return a.centroid.x < b.centroid.x;
              if (a.centroid.y != b.centroid.y) return a.centroid.y < b.centroid.y;
              return a.members.front() < b.members.front();
            });
  for (std::size_t c = 0; c < k; ++c) clusters[c].id = c + 1;

  ClusterDomain domain;
  domain.k = k;
  domain.clusters = std::move(clusters);
  domain.params = params;
  domain.iterations_used = run.iterations;
  domain.wcss = run.wcss;
  domain.best_restart = restart;
  domain.wcss_trace = run.trace;
  return domain;
}

}  // namespace

std::vector<Point2D> to_points(std::span<const CrashRecord> records) {
  std::vector<Point2D> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.longitude, r.latitude});
  return out;
}

std::size_t count_distinct(std::span<const Point2D> points) {
  return distinct_points(points).size();
}

std::vector<Point2D> seed_centroids(std::span<const Point2D> points,
                                    const KMeansParams& params) {
  check_feasible(points, params.k);
  random::Rng rng(params.rng_seed);
  return seed_with(points, params.k, params.seeding, rng);
}

std::size_t assign_point(Point2D p, std::span<const Point2D> centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(p, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

ClusterDomain run_kmeans(std::span<const Point2D> points,
                         const KMeansParams& params,
                         const IterationObserver& observer) {
  check_feasible(points, params.k);
  if (!(params.convergence_tol >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "convergence_tol must be >= 0");
  }
  const std::size_t restarts = std::max<std::size_t>(params.restarts, 1);

  LloydRun best;
  std::size_t best_restart = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    random::Rng rng(random::derive_seed(params.rng_seed, r));
    auto seeds = seed_with(points, params.k, params.seeding, rng);
    auto run = lloyd(points, std::move(seeds), params, r, observer);
    if (r == 0 || run.wcss < best.wcss) {
      best = std::move(run);
      best_restart = r;
    }
  }
  return finalize(best, params, best_restart);
}

double wcss(std::span<const Point2D> points, const ClusterDomain& domain) {
  double total = 0.0;
  for (const auto& cluster : domain.clusters) {
    for (auto i : cluster.members) {
      total += squared_distance(points[i], cluster.centroid);
    }
  }
  return total;
}

}  // namespace fatalpoint
