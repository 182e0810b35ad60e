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

#include <sstream>

#include "../support/table1.hpp"
#include "fatalpoint/error.hpp"
#include "fatalpoint/random.hpp"
#include "fatalpoint/report.hpp"
#include "fatalpoint/safety.hpp"

using namespace fatalpoint;
using fatalpoint::testing::kPrintedTable;

namespace {

std::vector<std::size_t> printed_fc() {
  std::vector<std::size_t> v;
  for (const auto& r : kPrintedTable) v.push_back(r.f_c);
  return v;
}

std::vector<std::size_t> printed_fsc() {
  std::vector<std::size_t> v;
  for (const auto& r : kPrintedTable) v.push_back(r.f_sc);
  return v;
}

}  // namespace

TEST(SafetyRatio, Examples) {
  EXPECT_DOUBLE_EQ(safety_ratio(141, 11), 141.0 / 11.0);
  EXPECT_NEAR(safety_ratio(141, 11), 12.8181818, 1e-6);
  EXPECT_EQ(safety_ratio(37, 37), 1.0);
  EXPECT_NEAR(safety_ratio(79, 3), 26.3333333, 1e-6);
}

TEST(SafetyRatio, Errors) {
  try {
    safety_ratio(5, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  try {
    safety_ratio(3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Invariant);
  }
}

TEST(SafetyRatio, OrderingInFatalAndClusterFrequency) {
  for (std::size_t fc = 2; fc < 60; ++fc) {
    for (std::size_t fsc = 1; fsc < fc; ++fsc) {
      // Fixed f_c: strictly decreasing in f_sc.
      EXPECT_GT(safety_ratio(fc, fsc), safety_ratio(fc, fsc + 1));
      // Fixed f_sc: strictly increasing in f_c.
      EXPECT_LT(safety_ratio(fc, fsc), safety_ratio(fc + 1, fsc));
      EXPECT_GE(safety_ratio(fc, fsc), 1.0);
    }
  }
}

TEST(MinMaxNormalize, ReferenceColumnValues) {
  std::vector<double> fc, uc;
  for (const auto& r : kPrintedTable) {
    fc.push_back(static_cast<double>(r.f_c));
    uc.push_back(static_cast<double>(r.f_c) / static_cast<double>(r.f_sc));
  }
  const auto nfc = min_max_normalize(fc);
  EXPECT_NEAR(nfc[0], 0.3558, 5e-5);  // (74 - 37) / 104
  const auto nuc = min_max_normalize(uc);
  EXPECT_NEAR(nuc[8], 0.2760, 5e-5);  // 141/11
  EXPECT_EQ(nuc[9], 1.0);             // 79/3 is the maximum
  EXPECT_EQ(nuc[14], 0.0);            // 46/6 is the minimum
}

TEST(MinMaxNormalize, DegenerateAndEmpty) {
  const std::vector<double> constant = {5, 5, 5};
  EXPECT_EQ(min_max_normalize(constant), (std::vector<double>{0, 0, 0}));
  try {
    min_max_normalize({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(MinMaxNormalize, BoundsAndAffineInvariance) {
  random::Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.below(30);
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng.uniform() * 50.0);
    const auto base = min_max_normalize(v);
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_GE(base[i], 0.0);
      ASSERT_LE(base[i], 1.0);
    }
    EXPECT_EQ(base[static_cast<std::size_t>(lo - v.begin())], 0.0);
    EXPECT_EQ(base[static_cast<std::size_t>(hi - v.begin())], 1.0);

    const double a = 0.1 + rng.uniform() * 10.0;
    const double b = (rng.uniform() - 0.5) * 100.0;
    std::vector<double> w;
    for (double x : v) w.push_back(a * x + b);
    const auto scaled = min_max_normalize(w);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(scaled[i], base[i], 1e-12);
  }
}

TEST(BuildDomainTable, ReferenceTableColumns) {
  const auto fc = printed_fc();
  const auto fsc = printed_fsc();
  const auto table = build_domain_table(fc, fsc);
  ASSERT_EQ(table.rows.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto& row = table.rows[i];
    EXPECT_EQ(row.cluster_id, i + 1);
    EXPECT_NEAR(row.normalized_frequency, kPrintedTable[i].n_fc, 5e-5) << "row " << i + 1;
    if (i == 13) {
      // Printed as 0.6550; exact arithmetic on 99/5 gives
      // (99/5 - 23/3) / (79/3 - 23/3) = 13/20.
      EXPECT_NEAR(row.normalized_ratio, 0.65, 1e-12);
      continue;
    }
    EXPECT_NEAR(row.normalized_ratio, kPrintedTable[i].n_uc, 5e-5) << "row " << i + 1;
  }
}

TEST(BuildDomainTable, SingleAndTwoClusterDomains) {
  const std::vector<std::size_t> one_fc = {12}, one_fsc = {4};
  const auto single = build_domain_table(one_fc, one_fsc);
  ASSERT_EQ(single.rows.size(), 1u);
  EXPECT_EQ(single.rows[0].normalized_frequency, 0.0);
  EXPECT_EQ(single.rows[0].normalized_ratio, 0.0);

  const std::vector<std::size_t> fc = {10, 20}, fsc = {2, 2};
  const auto two = build_domain_table(fc, fsc);
  EXPECT_EQ(two.rows[0].safety_ratio, 5.0);
  EXPECT_EQ(two.rows[1].safety_ratio, 10.0);
  EXPECT_EQ(two.rows[0].normalized_ratio, 0.0);
  EXPECT_EQ(two.rows[1].normalized_ratio, 1.0);
  EXPECT_EQ(two.rows[0].normalized_frequency, 0.0);
  EXPECT_EQ(two.rows[1].normalized_frequency, 1.0);
}

TEST(BuildDomainTable, AlignmentErrors) {
  ClusterDomain d;
  d.k = 2;
  d.clusters = {Cluster{1, {0, 1}, {}}, Cluster{2, {2}, {}}};
  FatalPoint a{1, {-8000}, 2, {{-80, 35}, {-80, 35}}, {-80, 35}};
  FatalPoint b{3, {-7900}, 1, {{-79, 35}}, {-79, 35}};
  const std::vector<FatalPoint> mismatched = {a, b};
  try {
    build_domain_table(d, mismatched);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Alignment);
  }
  const std::vector<FatalPoint> short_list = {a};
  EXPECT_THROW(build_domain_table(d, short_list), Error);
  b.cluster_id = 2;
  const std::vector<FatalPoint> ok = {a, b};
  const auto t = build_domain_table(d, ok);
  EXPECT_EQ(t.rows[1].representative, (Point2D{-79, 35}));
}

TEST(DomainTableCsv, FormatAndRoundTrip) {
  const auto table = build_domain_table(printed_fc(), printed_fsc());
  std::ostringstream out;
  write_domain_table_csv(out, table);
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "c,f_c,N_fc,f_sc,g,t,u_c,N_uc");
  EXPECT_NE(text.find("\n1,74,0.3558,7,"), std::string::npos);

  std::istringstream in(text);
  const auto back = report::read_domain_table_csv(in);
  ASSERT_EQ(back.rows.size(), table.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    EXPECT_EQ(back.rows[i].crash_frequency, table.rows[i].crash_frequency);
    EXPECT_EQ(back.rows[i].fatal_frequency, table.rows[i].fatal_frequency);
    EXPECT_EQ(back.rows[i].safety_ratio, table.rows[i].safety_ratio);
    EXPECT_NEAR(back.rows[i].normalized_frequency, table.rows[i].normalized_frequency, 5e-5);
    EXPECT_NEAR(back.rows[i].normalized_ratio, table.rows[i].normalized_ratio, 5e-5);
  }
}
