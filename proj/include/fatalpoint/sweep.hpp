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

// Runs the cluster -> fatal point -> safety table pipeline over a range of k
// and summarizes how the two measures behave across domains.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fatalpoint/fatal_point.hpp"
#include "fatalpoint/ingest.hpp"
#include "fatalpoint/kmeans.hpp"
#include "fatalpoint/safety.hpp"

namespace fatalpoint {

/// Sample Pearson correlation. Throws InvalidArgument for mismatched lengths
/// or fewer than two pairs, UndefinedCorrelation when either series is
/// constant.
double pearson(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> values);

/// Divides by n.
double population_variance(std::span<const double> values);

struct SweepParams {
  std::size_t k_min = 8;
  std::size_t k_max = 128;
  std::size_t step = 1;
  KMeansParams clustering;  // k is ignored; the seed is a template
  std::size_t threads = 0;  // 0: hardware concurrency
  /// Forwarded to every k-means run. Invoked concurrently from worker
  /// threads when threads != 1.
  IterationObserver observer;

  std::vector<std::size_t> ks() const;
};

/// Clustering parameters for one k; the seed is derive_seed(template, k), so
/// a given k gets the same clustering whatever range it is swept in.
KMeansParams params_for_k(const SweepParams& params, std::size_t k);

struct DomainAnalysis {
  ClusterDomain domain;
  std::vector<FatalPoint> fatal_points;
  DomainTable table;
};

DomainAnalysis analyze_domain(std::span<const CrashRecord> records,
                              const KMeansParams& params,
                              const IterationObserver& observer = {});

struct DomainStats {
  std::size_t k = 0;
  std::optional<double> corr_fc_fsc;   // Pearson(f_c, f_sc)
  std::optional<double> corr_nfc_nuc;  // Pearson(N(f_c), N(u_c))
  double mean_nfc = 0.0;
  double mean_nuc = 0.0;
  double var_nfc = 0.0;
  double var_nuc = 0.0;
  std::size_t iterations = 0;
  double wcss = 0.0;
};

DomainStats domain_stats(const DomainTable& table);

struct SweepResult {
  SweepParams params;
  std::vector<DomainStats> domains;    // ascending k
  std::optional<double> corr_of_corrs; // over k where both correlations exist
};

SweepResult run_sweep(std::span<const CrashRecord> records,
                      const SweepParams& params);

/// Pearson between the two per-domain correlation series, skipping domains
/// where either is undefined. Throws UndefinedCorrelation when fewer than two
/// usable domains remain or a series is constant.
double correlation_of_correlations(std::span<const DomainStats> domains);

struct GroupBoundary {
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
};

/// (8,24), (25,40), (41,64), (65,128).
std::vector<GroupBoundary> default_group_boundaries();

/// Intersects `boundaries` with [k_min, k_max], dropping groups left empty.
std::vector<GroupBoundary> clip_boundaries(std::span<const GroupBoundary> boundaries,
                                           std::size_t k_min, std::size_t k_max);

struct GroupStats {
  GroupBoundary bounds;
  std::size_t domains = 0;
  std::optional<double> mean_of_mean_nfc;
  std::optional<double> var_of_mean_nfc;
  std::optional<double> mean_of_mean_nuc;
  std::optional<double> var_of_mean_nuc;
};

struct GroupSummary {
  std::vector<GroupStats> groups;
};

/// Groups must be contiguous, non-overlapping and span the sweep's k range.
/// Throws Boundary otherwise.
GroupSummary group_summary(const SweepResult& sweep,
                           std::span<const GroupBoundary> boundaries);

}  // namespace fatalpoint
