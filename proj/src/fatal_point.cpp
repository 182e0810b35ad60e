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

#include "fatalpoint/fatal_point.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "fatalpoint/error.hpp"

namespace fatalpoint {

std::size_t SegmentHistogram::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

LogicalLongitude bin_longitude(double longitude) {
  if (!std::isfinite(longitude)) {
    throw Error(ErrorKind::InvalidArgument, "longitude is not finite");
  }
  if (std::fabs(longitude) > 180.0) {
    throw Error(ErrorKind::InvalidArgument,
                "longitude outside [-180, 180]: " + std::to_string(longitude));
  }
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, longitude,
                                 std::chars_format::fixed);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));

  const bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  const auto dot = text.find('.');
  const auto whole = text.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{}
                                                  : text.substr(dot + 1);
  auto frac_digit = [&](std::size_t i) {
    return i < frac.size() ? frac[i] - '0' : 0;
  };

  std::int32_t magnitude = 0;
  for (char ch : whole) magnitude = magnitude * 10 + (ch - '0');
  magnitude = magnitude * 100 + frac_digit(0) * 10 + frac_digit(1);
  if (frac_digit(2) >= 5) ++magnitude;
  return {negative ? -magnitude : magnitude};
}

SegmentHistogram segment_histogram(std::span<const CrashRecord> members,
                                   std::size_t cluster_id) {
  if (members.empty()) {
    throw Error(ErrorKind::EmptyCluster,
                "cluster " + std::to_string(cluster_id) + " has no members");
  }
  SegmentHistogram h;
  h.cluster_id = cluster_id;
  for (const auto& m : members) ++h.counts[bin_longitude(m.longitude).hundredths];
  return h;
}

FatalPoint detect_fatal_point(std::size_t cluster_id,
                              std::span<const CrashRecord> members) {
  const auto histogram = segment_histogram(members, cluster_id);
  // std::map iterates keys ascending, so the first maximum is the smallest key.
  auto mode = histogram.counts.begin();
  for (auto it = histogram.counts.begin(); it != histogram.counts.end(); ++it) {
    if (it->second > mode->second) mode = it;
  }

  FatalPoint fp;
  fp.cluster_id = cluster_id;
  fp.bin = {mode->first};
  fp.frequency = mode->second;
  for (const auto& m : members) {
    if (bin_longitude(m.longitude).hundredths == mode->first) {
      fp.members.push_back({m.longitude, m.latitude});
    }
  }
  std::sort(fp.members.begin(), fp.members.end());
  fp.representative = fp.members.front();
  return fp;
}

FatalPoint detect_fatal_point(const Cluster& cluster,
                              std::span<const CrashRecord> records) {
  std::vector<CrashRecord> members;
  members.reserve(cluster.members.size());
  for (auto i : cluster.members) {
    if (i >= records.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "cluster member index " + std::to_string(i) +
                      " outside the record set");
    }
    members.push_back(records[i]);
  }
  return detect_fatal_point(cluster.id, members);
}

std::vector<FatalPoint> detect_fatal_points(const ClusterDomain& domain,
                                            std::span<const CrashRecord> records) {
  std::vector<FatalPoint> out;
  out.reserve(domain.clusters.size());
  for (const auto& c : domain.clusters) out.push_back(detect_fatal_point(c, records));
  return out;
}

}  // namespace fatalpoint
