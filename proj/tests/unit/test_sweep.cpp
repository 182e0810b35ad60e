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

#include "../support/naive_pipeline.hpp"
#include "../support/table1.hpp"
#include "fatalpoint/error.hpp"
#include "fatalpoint/random.hpp"
#include "fatalpoint/report.hpp"
#include "fatalpoint/sweep.hpp"
#include "fatalpoint/synth.hpp"

using namespace fatalpoint;

namespace {

std::vector<CrashRecord> synthetic(std::uint64_t seed, std::size_t n) {
  auto cfg = SynthConfig::north_carolina();
  cfg.seed = seed;
  cfg.n_points = n;
  return generate(cfg);
}

void expect_close(const std::optional<double>& a, const std::optional<double>& b) {
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_NEAR(*a, *b, 1e-9);
  }
}

}  // namespace

TEST(Pearson, Examples) {
  const std::vector<double> a = {1, 2, 3}, b = {3, 2, 1};
  EXPECT_NEAR(pearson(a, a), 1.0, 1e-15);
  EXPECT_NEAR(pearson(a, b), -1.0, 1e-15);
  const std::vector<double> x = {1, 2, 3, 4}, y = {1, 3, 2, 4};
  EXPECT_NEAR(pearson(x, y), 0.8, 1e-15);
}

TEST(Pearson, ReferenceTableCorrelation) {
  std::vector<double> fc, fsc;
  for (const auto& r : fatalpoint::testing::kPrintedTable) {
    fc.push_back(static_cast<double>(r.f_c));
    fsc.push_back(static_cast<double>(r.f_sc));
  }
  EXPECT_NEAR(pearson(fc, fsc), fatalpoint::testing::kPrintedCorrFcFsc, 5e-5);
}

TEST(Pearson, Errors) {
  const std::vector<double> one = {1}, two = {1, 2}, three = {1, 2, 3}, flat = {4, 4, 4};
  try {
    pearson(flat, three);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedCorrelation);
  }
  try {
    pearson(two, three);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  EXPECT_THROW(pearson(one, one), Error);
}

TEST(Pearson, SymmetryAndAffineInvariance) {
  random::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(40);
    std::vector<double> x, y, ax;
    const double a = 0.01 + rng.uniform() * 20.0, b = (rng.uniform() - 0.5) * 50.0;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(rng.normal());
      y.push_back(0.5 * x.back() + rng.normal());
      ax.push_back(a * x.back() + b);
    }
    const double r = pearson(x, y);
    ASSERT_GE(r, -1.0);
    ASSERT_LE(r, 1.0);
    EXPECT_NEAR(r, pearson(y, x), 1e-12);
    EXPECT_NEAR(r, pearson(ax, y), 1e-12);
    EXPECT_NEAR(r, *fatalpoint::testing::naive_pearson(x, y), 1e-9);
  }
}

TEST(Statistics, MeanAndPopulationVariance) {
  const std::vector<double> v = {0, 0.5, 1, 1};
  EXPECT_DOUBLE_EQ(mean(v), 0.625);
  EXPECT_DOUBLE_EQ(population_variance(v), 0.171875);
}

TEST(SweepParams, DomainCount) {
  SweepParams p;
  EXPECT_EQ(p.ks().size(), 121u);
  p.k_min = 8;
  p.k_max = 20;
  p.step = 5;
  EXPECT_EQ(p.ks(), (std::vector<std::size_t>{8, 13, 18}));
  p.k_min = 9;
  p.k_max = 8;
  EXPECT_THROW(p.ks(), Error);
}

TEST(RunSweep, MatchesNaivePipelineOnSyntheticData) {
  const auto records = synthetic(42, 500);
  SweepParams p;
  p.k_min = 8;
  p.k_max = 12;
  const auto result = run_sweep(records, p);
  ASSERT_EQ(result.domains.size(), 5u);
  const auto points = to_points(records);
  for (std::size_t i = 0; i < result.domains.size(); ++i) {
    const auto& d = result.domains[i];
    EXPECT_EQ(d.k, 8 + i);
    const auto domain = run_kmeans(points, params_for_k(p, d.k));
    const auto naive = fatalpoint::testing::naive_domain_stats(records, domain);
    expect_close(d.corr_fc_fsc, naive.corr_fc_fsc);
    expect_close(d.corr_nfc_nuc, naive.corr_nfc_nuc);
    EXPECT_NEAR(d.mean_nfc, naive.mean_nfc, 1e-12);
    EXPECT_NEAR(d.mean_nuc, naive.mean_nuc, 1e-12);
    EXPECT_NEAR(d.var_nfc, naive.var_nfc, 1e-12);
    EXPECT_NEAR(d.var_nuc, naive.var_nuc, 1e-12);
  }
  ASSERT_TRUE(result.corr_of_corrs.has_value());
}

TEST(RunSweep, SingleDomainHasUndefinedCorrOfCorrs) {
  const auto records = synthetic(1, 300);
  SweepParams p;
  p.k_min = p.k_max = 16;
  const auto result = run_sweep(records, p);
  ASSERT_EQ(result.domains.size(), 1u);
  EXPECT_FALSE(result.corr_of_corrs.has_value());
  try {
    correlation_of_correlations(result.domains);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedCorrelation);
  }
}

TEST(RunSweep, DeterministicAcrossThreadCountsAndRanges) {
  const auto records = synthetic(9, 400);
  SweepParams p;
  p.k_min = 10;
  p.k_max = 20;
  p.threads = 1;
  const auto serial = run_sweep(records, p);
  p.threads = 4;
  const auto parallel = run_sweep(records, p);
  std::ostringstream a, b;
  report::write_sweep_csv(a, serial);
  report::write_sweep_csv(b, parallel);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(report::to_json(serial).dump(), report::to_json(parallel).dump());

  // A narrower range gives the same numbers for the k values it shares.
  p.k_min = 15;
  const auto narrow = run_sweep(records, p);
  for (const auto& d : narrow.domains) {
    const auto& full = serial.domains[d.k - 10];
    EXPECT_EQ(d.mean_nuc, full.mean_nuc);
    EXPECT_EQ(d.corr_fc_fsc, full.corr_fc_fsc);
    EXPECT_EQ(d.wcss, full.wcss);
  }
}

TEST(RunSweep, InfeasibleAndEmpty) {
  const std::vector<CrashRecord> few = {{"a", -80, 35}, {"b", -79, 35}, {"c", -79, 35}};
  SweepParams p;
  p.k_min = 1;
  p.k_max = 3;
  try {
    run_sweep(few, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleK);
  }
  try {
    run_sweep({}, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(RunSweep, DomainStatsBounds) {
  const auto records = synthetic(3, 350);
  SweepParams p;
  p.k_min = 2;
  p.k_max = 30;
  p.step = 2;
  const auto result = run_sweep(records, p);
  for (const auto& d : result.domains) {
    EXPECT_GE(d.mean_nfc, 0.0);
    EXPECT_LE(d.mean_nfc, 1.0);
    EXPECT_GE(d.mean_nuc, 0.0);
    EXPECT_LE(d.mean_nuc, 1.0);
    EXPECT_GE(d.var_nfc, 0.0);
    EXPECT_LE(d.var_nfc, 0.25);
    EXPECT_GE(d.var_nuc, 0.0);
    EXPECT_LE(d.var_nuc, 0.25);
    for (const auto& c : {d.corr_fc_fsc, d.corr_nfc_nuc}) {
      if (c) {
        EXPECT_GE(*c, -1.0);
        EXPECT_LE(*c, 1.0);
      }
    }
  }
}

namespace {

SweepResult hand_sweep() {
  SweepResult s;
  s.params.k_min = 8;
  s.params.k_max = 12;
  const double nfc[] = {0.2, 0.4, 0.3, 0.5, 0.1};
  const double nuc[] = {0.5, 0.3, 0.4, 0.2, 0.6};
  for (std::size_t i = 0; i < 5; ++i) {
    DomainStats d;
    d.k = 8 + i;
    d.mean_nfc = nfc[i];
    d.mean_nuc = nuc[i];
    s.domains.push_back(d);
  }
  return s;
}

}  // namespace

TEST(GroupSummary, HandComputedGroups) {
  const auto sweep = hand_sweep();
  const std::vector<GroupBoundary> groups = {{8, 9}, {10, 12}};
  const auto g = group_summary(sweep, groups);
  ASSERT_EQ(g.groups.size(), 2u);
  EXPECT_EQ(g.groups[0].domains, 2u);
  EXPECT_NEAR(*g.groups[0].mean_of_mean_nfc, 0.3, 1e-15);
  EXPECT_NEAR(*g.groups[0].var_of_mean_nfc, 0.01, 1e-15);
  EXPECT_NEAR(*g.groups[0].mean_of_mean_nuc, 0.4, 1e-15);
  EXPECT_EQ(g.groups[1].domains, 3u);
  EXPECT_NEAR(*g.groups[1].mean_of_mean_nfc, 0.3, 1e-15);
  // (0.3, 0.5, 0.1) about 0.3: (0 + 0.04 + 0.04) / 3
  EXPECT_NEAR(*g.groups[1].var_of_mean_nfc, 0.08 / 3.0, 1e-15);
  EXPECT_NEAR(*g.groups[1].mean_of_mean_nuc, 0.4, 1e-15);
}

TEST(GroupSummary, SingleGroupEqualsWholeSweep) {
  const auto sweep = hand_sweep();
  const std::vector<GroupBoundary> all = {{8, 12}};
  const auto g = group_summary(sweep, all);
  std::vector<double> nfc;
  for (const auto& d : sweep.domains) nfc.push_back(d.mean_nfc);
  EXPECT_DOUBLE_EQ(*g.groups[0].mean_of_mean_nfc, mean(nfc));
  EXPECT_DOUBLE_EQ(*g.groups[0].var_of_mean_nfc, population_variance(nfc));
}

TEST(GroupSummary, DefaultGroupSizes) {
  SweepResult s;
  for (std::size_t k = 8; k <= 128; ++k) {
    DomainStats d;
    d.k = k;
    s.domains.push_back(d);
  }
  const auto g = group_summary(s, default_group_boundaries());
  ASSERT_EQ(g.groups.size(), 4u);
  EXPECT_EQ(g.groups[0].domains, 17u);
  EXPECT_EQ(g.groups[1].domains, 16u);
  EXPECT_EQ(g.groups[2].domains, 24u);
  EXPECT_EQ(g.groups[3].domains, 64u);
}

TEST(GroupSummary, GapOverlapAndCoverageErrors) {
  const auto sweep = hand_sweep();
  const std::vector<std::vector<GroupBoundary>> bad = {
      {{8, 9}, {11, 12}},   // gap
      {{8, 10}, {10, 12}},  // overlap
      {{9, 12}},            // misses k = 8
      {{8, 11}},            // misses k = 12
      {{10, 8}},
      {},
  };
  for (const auto& b : bad) {
    try {
      group_summary(sweep, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Boundary);
    }
  }
  const auto clipped = clip_boundaries(default_group_boundaries(), 8, 12);
  ASSERT_EQ(clipped.size(), 1u);
  EXPECT_EQ(clipped[0].k_hi, 12u);
}
