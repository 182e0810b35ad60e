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

// File emitters: JSON documents, flat plot-data CSVs and static SVG charts.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fatalpoint/fatal_point.hpp"
#include "fatalpoint/ingest.hpp"
#include "fatalpoint/kmeans.hpp"
#include "fatalpoint/safety.hpp"
#include "fatalpoint/sweep.hpp"

namespace fatalpoint::report {

using nlohmann::json;

json to_json(const CleansingReport& report);
json to_json(const FatalPoint& fp);

/// {k, seed, iterations, wcss, clusters:[{c, centroid, member_record_ids}],
///  fatal_points:[...]}
json to_json(const ClusterDomain& domain, std::span<const CrashRecord> records,
             std::span<const FatalPoint> fatal_points);

json to_json(const SweepResult& sweep);
json to_json(const GroupSummary& groups);

/// Two-space indented dump with a trailing newline.
void write_json(std::ostream& out, const json& doc);

/// k,corr_fc_fsc,corr_nfc_nuc,mean_nfc,mean_nuc,var_nfc,var_nuc; an undefined
/// correlation is written as NA.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

std::vector<DomainStats> read_sweep_csv(std::istream& in);
DomainTable read_domain_table_csv(std::istream& in);

/// Distinct fill color per cluster (golden-angle hue walk).
std::string cluster_color(std::size_t cluster_id);

/// Scatter of every record colored by cluster (CSS class "cN" for cluster N),
/// centroids drawn as crosses and each fatal point as its 0.01-degree strip.
void write_cluster_svg(std::ostream& out, const ClusterDomain& domain,
                       std::span<const CrashRecord> records,
                       std::span<const FatalPoint> fatal_points);

struct Series {
  std::string name;
  std::string color;
  std::vector<std::optional<double>> values;  // gaps break the line
};

void write_line_chart_svg(std::ostream& out, const std::string& title,
                          const std::string& y_label,
                          std::span<const double> x, std::span<const Series> series);

enum class SweepChart { Correlation, Mean, Variance };

void write_sweep_svg(std::ostream& out, const SweepResult& sweep, SweepChart chart);

}  // namespace fatalpoint::report
