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

#include "fatalpoint/synth.hpp"

#include <cmath>
#include <cstdio>

#include "fatalpoint/error.hpp"
#include "fatalpoint/random.hpp"

namespace fatalpoint {

SynthConfig SynthConfig::north_carolina() {
  SynthConfig c;
  c.blob_centers = {
      {-80.8431, 35.2271},  // Charlotte
      {-79.7920, 36.0726},  // Greensboro
      {-78.6382, 35.7796},  // Raleigh
  };
  c.corridor_segments = {
      {{-82.55, 35.60}, {-77.95, 34.25}, 2.0},  // I-40
      {{-80.84, 35.23}, {-78.40, 36.45}, 1.5},  // I-85
  };
  return c;
}

namespace {

constexpr int kMaxAttempts = 10000;

double round_to(double v, int decimals) {
  if (decimals < 0) return v;
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

}  // namespace

std::vector<CrashRecord> generate(const SynthConfig& config) {
  if (config.n_points == 0) {
    throw Error(ErrorKind::InvalidArgument, "n_points must be at least 1");
  }
  if (config.blob_centers.empty() && config.corridor_segments.empty()) {
    throw Error(ErrorKind::Config, "synthetic mixture has no blobs or corridors");
  }
  if (config.blob_stddev < 0.0 || config.corridor_stddev < 0.0) {
    throw Error(ErrorKind::Config, "standard deviations must be non-negative");
  }

  std::vector<double> weights;
  for (std::size_t i = 0; i < config.blob_centers.size(); ++i) {
    weights.push_back(config.blob_weight);
  }
  for (const auto& c : config.corridor_segments) weights.push_back(c.intensity);
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorKind::Config, "negative mixture weight");
    total += w;
  }
  if (total <= 0.0) throw Error(ErrorKind::Config, "mixture weights sum to zero");

  random::Rng rng(config.seed);
  auto pick_component = [&] {
    const double target = rng.uniform() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      cumulative += weights[i];
      if (target < cumulative) return i;
    }
    return weights.size() - 1;
  };

  auto draw = [&](std::size_t component) -> Point2D {
    if (component < config.blob_centers.size()) {
      const auto c = config.blob_centers[component];
      const double dx = rng.normal() * config.blob_stddev;
      const double dy = rng.normal() * config.blob_stddev;
      return {c.x + dx, c.y + dy};
    }
    const auto& seg = config.corridor_segments[component - config.blob_centers.size()];
    const double t = rng.uniform();
    const double vx = seg.to.x - seg.from.x;
    const double vy = seg.to.y - seg.from.y;
    const double len = std::hypot(vx, vy);
    const double off = rng.normal() * config.corridor_stddev;
    const double nx = len > 0.0 ? -vy / len : 0.0;
    const double ny = len > 0.0 ? vx / len : 0.0;
    return {seg.from.x + t * vx + off * nx, seg.from.y + t * vy + off * ny};
  };

  std::vector<CrashRecord> out;
  out.reserve(config.n_points);
  for (std::size_t i = 0; i < config.n_points; ++i) {
    const auto component = pick_component();
    Point2D p;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts) {
        throw Error(ErrorKind::Config,
                    "mixture component " + std::to_string(component) +
                        " never lands inside the bounding box");
      }
      p = draw(component);
      p = {round_to(p.x, config.decimals), round_to(p.y, config.decimals)};
      if (config.box.contains(p)) break;
    }
    char id[32];
    std::snprintf(id, sizeof id, "S%06zu", i + 1);
    out.push_back({id, p.x, p.y});
  }
  return out;
}

}  // namespace fatalpoint
