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

#include "fatalpoint/safety.hpp"

#include <algorithm>
#include <string>

#include "fatalpoint/csv.hpp"
#include "fatalpoint/error.hpp"

namespace fatalpoint {

double safety_ratio(std::size_t crash_frequency, std::size_t fatal_frequency) {
  if (fatal_frequency == 0) {
    throw Error(ErrorKind::InvalidArgument, "fatal point frequency is zero");
  }
  if (fatal_frequency > crash_frequency) {
    throw Error(ErrorKind::Invariant,
                "fatal point frequency " + std::to_string(fatal_frequency) +
                    " exceeds cluster frequency " +
                    std::to_string(crash_frequency));
  }
  return static_cast<double>(crash_frequency) /
         static_cast<double>(fatal_frequency);
}

std::vector<double> min_max_normalize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "nothing to normalize");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out(values.size(), 0.0);
  if (range > 0.0) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out[i] = (values[i] - min) / range;
    }
  }
  return out;
}

namespace {

void normalize_columns(DomainTable& table) {
  std::vector<double> fc, uc;
  fc.reserve(table.rows.size());
  uc.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    fc.push_back(static_cast<double>(r.crash_frequency));
    uc.push_back(r.safety_ratio);
  }
  const auto nfc = min_max_normalize(fc);
  const auto nuc = min_max_normalize(uc);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    table.rows[i].normalized_frequency = nfc[i];
    table.rows[i].normalized_ratio = nuc[i];
  }
}

}  // namespace

DomainTable build_domain_table(const ClusterDomain& domain,
                               std::span<const FatalPoint> fatal_points) {
  if (fatal_points.size() != domain.clusters.size()) {
    throw Error(ErrorKind::Alignment,
                std::to_string(domain.clusters.size()) + " clusters but " +
                    std::to_string(fatal_points.size()) + " fatal points");
  }
  DomainTable table;
  table.k = domain.k;
  for (std::size_t i = 0; i < fatal_points.size(); ++i) {
    const auto& cluster = domain.clusters[i];
    const auto& fp = fatal_points[i];
    if (fp.cluster_id != cluster.id) {
      throw Error(ErrorKind::Alignment,
                  "fatal point for cluster " + std::to_string(fp.cluster_id) +
                      " paired with cluster " + std::to_string(cluster.id));
    }
    SafetyRow row;
    row.cluster_id = cluster.id;
    row.crash_frequency = cluster.frequency();
    row.fatal_frequency = fp.frequency;
    row.representative = fp.representative;
    row.safety_ratio = safety_ratio(row.crash_frequency, row.fatal_frequency);
    table.rows.push_back(row);
  }
  if (!table.rows.empty()) normalize_columns(table);
  return table;
}

DomainTable build_domain_table(std::span<const std::size_t> crash_frequencies,
                               std::span<const std::size_t> fatal_frequencies) {
  if (crash_frequencies.size() != fatal_frequencies.size()) {
    throw Error(ErrorKind::Alignment, "f_c and f_sc columns differ in length");
  }
  DomainTable table;
  table.k = crash_frequencies.size();
  for (std::size_t i = 0; i < crash_frequencies.size(); ++i) {
    SafetyRow row;
    row.cluster_id = i + 1;
    row.crash_frequency = crash_frequencies[i];
    row.fatal_frequency = fatal_frequencies[i];
    row.safety_ratio = safety_ratio(row.crash_frequency, row.fatal_frequency);
    table.rows.push_back(row);
  }
  if (!table.rows.empty()) normalize_columns(table);
  return table;
}

void write_domain_table_csv(std::ostream& out, const DomainTable& table) {
  out << "c,f_c,N_fc,f_sc,g,t,u_c,N_uc\n";
  for (const auto& r : table.rows) {
    out << r.cluster_id << ',' << r.crash_frequency << ','
        << csv::format_fixed(r.normalized_frequency, 4) << ','
        << r.fatal_frequency << ',' << csv::format_shortest(r.representative.x)
        << ',' << csv::format_shortest(r.representative.y) << ','
        << csv::format_shortest(r.safety_ratio) << ','
        << csv::format_fixed(r.normalized_ratio, 4) << '\n';
  }
}

}  // namespace fatalpoint
