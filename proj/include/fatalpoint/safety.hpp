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

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "fatalpoint/fatal_point.hpp"
#include "fatalpoint/kmeans.hpp"

namespace fatalpoint {

struct SafetyRow {
  std::size_t cluster_id = 0;
  std::size_t crash_frequency = 0;     // f_c
  double normalized_frequency = 0.0;   // N(f_c)
  std::size_t fatal_frequency = 0;     // f_sc
  Point2D representative;              // (g, t)
  double safety_ratio = 0.0;           // u_c
  double normalized_ratio = 0.0;       // N(u_c)
};

struct DomainTable {
  std::size_t k = 0;
  std::vector<SafetyRow> rows;  // ordered by cluster id
};

/// u_c = f_c / f_sc. Larger means less safe, the same polarity as f_c.
/// Throws InvalidArgument when f_sc == 0 and Invariant when f_sc > f_c.
double safety_ratio(std::size_t crash_frequency, std::size_t fatal_frequency);

/// (v - min) / (max - min); a constant column maps to all zeros.
/// Throws EmptyInput on an empty list.
std::vector<double> min_max_normalize(std::span<const double> values);

/// Builds the per-cluster table; normalization is within this domain only.
/// Throws Alignment unless fatal_points[i] belongs to domain.clusters[i].
DomainTable build_domain_table(const ClusterDomain& domain,
                               std::span<const FatalPoint> fatal_points);

/// Same table from bare (f_c, f_sc) columns, e.g. a printed reference table.
DomainTable build_domain_table(std::span<const std::size_t> crash_frequencies,
                               std::span<const std::size_t> fatal_frequencies);

/// Header c,f_c,N_fc,f_sc,g,t,u_c,N_uc. Normalized columns at 4 decimals,
/// everything else at full precision.
void write_domain_table_csv(std::ostream& out, const DomainTable& table);

}  // namespace fatalpoint
