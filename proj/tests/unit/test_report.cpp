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

#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "fatalpoint/report.hpp"
#include "fatalpoint/synth.hpp"

using namespace fatalpoint;

namespace {

std::vector<CrashRecord> small_data() {
  auto cfg = SynthConfig::north_carolina();
  cfg.seed = 5;
  cfg.n_points = 250;
  return generate(cfg);
}

// Every opened element is closed in order; self-closing tags are skipped.
bool balanced_tags(const std::string& xml) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(xml.begin(), xml.end(), tag);
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else {
      stack.push_back(m[2]);
    }
  }
  return stack.empty();
}

}  // namespace

TEST(Report, SweepCsvRoundTrip) {
  const auto records = small_data();
  SweepParams p;
  p.k_min = 4;
  p.k_max = 9;
  const auto sweep = run_sweep(records, p);
  std::stringstream ss;
  report::write_sweep_csv(ss, sweep);
  const auto back = report::read_sweep_csv(ss);
  ASSERT_EQ(back.size(), sweep.domains.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].k, sweep.domains[i].k);
    EXPECT_EQ(back[i].corr_fc_fsc, sweep.domains[i].corr_fc_fsc);
    EXPECT_EQ(back[i].corr_nfc_nuc, sweep.domains[i].corr_nfc_nuc);
    EXPECT_EQ(back[i].mean_nfc, sweep.domains[i].mean_nfc);
    EXPECT_EQ(back[i].var_nuc, sweep.domains[i].var_nuc);
  }
}

TEST(Report, UndefinedCorrelationWrittenAsNA) {
  SweepResult s;
  DomainStats d;
  d.k = 3;
  d.corr_fc_fsc = 0.5;
  s.domains.push_back(d);
  std::ostringstream out;
  report::write_sweep_csv(out, s);
  EXPECT_NE(out.str().find("3,0.5,NA,"), std::string::npos);
  EXPECT_TRUE(report::to_json(s)["domains"][0]["corr_nfc_nuc"].is_null());
  EXPECT_TRUE(report::to_json(s)["corr_of_corrs"].is_null());
}

TEST(Report, ClusterSvgHasOneClassPerCluster) {
  const auto records = small_data();
  KMeansParams params;
  params.k = 7;
  const auto a = analyze_domain(records, params);
  std::ostringstream out;
  report::write_cluster_svg(out, a.domain, records, a.fatal_points);
  const auto svg = out.str();
  EXPECT_TRUE(svg.starts_with("<?xml") || svg.starts_with("<svg"));
  EXPECT_TRUE(balanced_tags(svg));
  std::set<std::string> groups;
  const std::regex g(R"re(<g class="(c\d+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), g);
       it != std::sregex_iterator(); ++it) {
    groups.insert((*it)[1]);
  }
  EXPECT_EQ(groups.size(), 7u);
  std::size_t fatal = 0, pos = 0;
  while ((pos = svg.find("class=\"fatal\"", pos)) != std::string::npos) ++fatal, ++pos;
  EXPECT_EQ(fatal, 7u);
}

TEST(Report, SweepChartsAreWellFormed) {
  const auto records = small_data();
  SweepParams p;
  p.k_min = 3;
  p.k_max = 8;
  const auto sweep = run_sweep(records, p);
  for (auto chart : {report::SweepChart::Correlation, report::SweepChart::Mean,
                     report::SweepChart::Variance}) {
    std::ostringstream out;
    report::write_sweep_svg(out, sweep, chart);
    EXPECT_TRUE(balanced_tags(out.str()));
    EXPECT_NE(out.str().find("<polyline"), std::string::npos);
  }
}

TEST(Report, DistinctClusterColors) {
  std::set<std::string> colors;
  for (std::size_t c = 1; c <= 128; ++c) colors.insert(report::cluster_color(c));
  EXPECT_EQ(colors.size(), 128u);
}

TEST(Report, ClusterJsonListsMembers) {
  const auto records = small_data();
  KMeansParams params;
  params.k = 5;
  const auto a = analyze_domain(records, params);
  const auto doc = report::to_json(a.domain, records, a.fatal_points);
  EXPECT_EQ(doc["k"], 5);
  std::size_t total = 0;
  for (const auto& c : doc["clusters"]) total += c["member_record_ids"].size();
  EXPECT_EQ(total, records.size());
  EXPECT_EQ(doc["fatal_points"].size(), 5u);
}
