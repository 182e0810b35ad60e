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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fatalpoint/fatalpoint.h"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fatalpoint_capi_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fp_record_set* synth(std::size_t n, std::uint64_t seed) {
    fp_synth_config cfg;
    fp_synth_config_init(&cfg);
    cfg.n_points = n;
    cfg.seed = seed;
    fp_record_set* records = nullptr;
    EXPECT_EQ(fp_synth_generate(&cfg, &records), FP_OK) << fp_last_error();
    return records;
  }

  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CApi, VersionAndStatusStrings) {
  EXPECT_GT(std::strlen(fp_version()), 0u);
  EXPECT_STREQ(fp_status_string(FP_OK), "ok");
  EXPECT_GT(std::strlen(fp_status_string(FP_ERR_INFEASIBLE_K)), 0u);
}

TEST_F(CApi, IngestFixture) {
  const std::string fixture = std::string(FATALPOINT_TEST_DATA_DIR) + "/ten_rows.csv";
  fp_record_set* records = nullptr;
  fp_cleansing* report = nullptr;
  ASSERT_EQ(fp_records_ingest(fixture.c_str(), nullptr, &records, &report), FP_OK)
      << fp_last_error();
  std::size_t total = 0, accepted = 0, rejected = 0;
  fp_cleansing_counts(report, &total, &accepted, &rejected);
  EXPECT_EQ(total, 10u);
  EXPECT_EQ(accepted, 7u);
  EXPECT_EQ(rejected, 3u);
  EXPECT_EQ(fp_records_count(records), 7u);
  const char* id = nullptr;
  double lon = 0, lat = 0;
  ASSERT_EQ(fp_records_get(records, 0, &id, &lon, &lat), FP_OK);
  EXPECT_GT(std::strlen(id), 0u);
  EXPECT_EQ(fp_records_get(records, 7, &id, &lon, &lat), FP_ERR_INVALID_ARGUMENT);

  // The canonical CSV is re-ingested unchanged.
  ASSERT_EQ(fp_records_write_csv(records, path("records.csv").c_str()), FP_OK);
  fp_record_set* again = nullptr;
  ASSERT_EQ(fp_records_ingest(path("records.csv").c_str(), nullptr, &again, nullptr), FP_OK);
  ASSERT_EQ(fp_records_write_csv(again, path("again.csv").c_str()), FP_OK);
  EXPECT_EQ(slurp(dir_ / "records.csv"), slurp(dir_ / "again.csv"));
  ASSERT_EQ(fp_cleansing_write_json(report, path("cleansing.json").c_str()), FP_OK);
  EXPECT_NE(slurp(dir_ / "cleansing.json").find("\"rejected\""), std::string::npos);
  fp_records_free(again);
  fp_records_free(records);
  fp_cleansing_free(report);
}

TEST_F(CApi, IngestErrors) {
  fp_record_set* records = nullptr;
  EXPECT_EQ(fp_records_ingest(path("missing.csv").c_str(), nullptr, &records, nullptr),
            FP_ERR_IO);
  EXPECT_GT(std::strlen(fp_last_error()), 0u);
  std::ofstream(dir_ / "bad.csv") << "a,b\n1,2\n";
  EXPECT_EQ(fp_records_ingest(path("bad.csv").c_str(), nullptr, &records, nullptr),
            FP_ERR_CONFIG);
  EXPECT_EQ(fp_records_ingest(nullptr, nullptr, &records, nullptr),
            FP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(records, nullptr);
}

TEST_F(CApi, DomainAnalysis) {
  fp_record_set* records = synth(400, 11);
  fp_domain* domain = nullptr;
  ASSERT_EQ(fp_domain_analyze(records, 12, nullptr, &domain), FP_OK) << fp_last_error();
  EXPECT_EQ(fp_domain_k(domain), 12u);
  EXPECT_GT(fp_domain_wcss(domain), 0.0);
  EXPECT_GE(fp_domain_iterations(domain), 1u);
  std::size_t total = 0;
  double min_n = 1, max_n = 0;
  for (std::size_t i = 0; i < 12; ++i) {
    fp_safety_row row;
    ASSERT_EQ(fp_domain_row(domain, i, &row), FP_OK);
    EXPECT_EQ(row.c, i + 1);
    EXPECT_LE(row.f_sc, row.f_c);
    EXPECT_NEAR(row.u_c, static_cast<double>(row.f_c) / row.f_sc, 1e-12);
    min_n = std::min(min_n, row.n_uc);
    max_n = std::max(max_n, row.n_uc);
    total += row.f_c;
  }
  EXPECT_EQ(total, 400u);
  EXPECT_EQ(min_n, 0.0);
  EXPECT_EQ(max_n, 1.0);
  fp_safety_row row;
  EXPECT_EQ(fp_domain_row(domain, 12, &row), FP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fp_domain_write_table_csv(domain, path("t.csv").c_str()), FP_OK);
  EXPECT_EQ(fp_domain_write_clusters_json(domain, path("c.json").c_str()), FP_OK);
  EXPECT_EQ(fp_domain_write_svg(domain, path("c.svg").c_str()), FP_OK);
  EXPECT_TRUE(slurp(dir_ / "t.csv").starts_with("c,f_c,N_fc,f_sc,g,t,u_c,N_uc\n"));
  fp_domain_free(domain);

  EXPECT_EQ(fp_domain_analyze(records, 401, nullptr, &domain), FP_ERR_INFEASIBLE_K);
  EXPECT_EQ(fp_domain_analyze(records, 0, nullptr, &domain), FP_ERR_INVALID_ARGUMENT);
  fp_records_free(records);
}

TEST_F(CApi, SweepIsDeterministic) {
  fp_record_set* records = synth(300, 21);
  fp_sweep_params params;
  fp_sweep_params_init(&params);
  EXPECT_EQ(params.k_min, 8u);
  EXPECT_EQ(params.k_max, 128u);
  params.k_max = 14;
  fp_sweep* a = nullptr;
  fp_sweep* b = nullptr;
  ASSERT_EQ(fp_sweep_run(records, &params, &a), FP_OK) << fp_last_error();
  params.threads = 1;
  ASSERT_EQ(fp_sweep_run(records, &params, &b), FP_OK);
  ASSERT_EQ(fp_sweep_count(a), 7u);
  ASSERT_EQ(fp_sweep_write_csv(a, path("a.csv").c_str()), FP_OK);
  ASSERT_EQ(fp_sweep_write_csv(b, path("b.csv").c_str()), FP_OK);
  ASSERT_EQ(fp_sweep_write_json(a, path("a.json").c_str()), FP_OK);
  ASSERT_EQ(fp_sweep_write_json(b, path("b.json").c_str()), FP_OK);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));

  fp_domain_stats s;
  ASSERT_EQ(fp_sweep_stats(a, 0, &s), FP_OK);
  EXPECT_EQ(s.k, 8u);
  EXPECT_EQ(fp_sweep_stats(a, 7, &s), FP_ERR_INVALID_ARGUMENT);
  double coc = 0;
  const fp_status st = fp_sweep_corr_of_corrs(a, &coc);
  EXPECT_TRUE(st == FP_OK || st == FP_ERR_UNDEFINED_CORRELATION);

  EXPECT_EQ(fp_sweep_write_groups_json(a, nullptr, 0, path("g.json").c_str()), FP_OK);
  const fp_group_bounds good[] = {{8, 10}, {11, 14}};
  EXPECT_EQ(fp_sweep_write_groups_json(a, good, 2, path("g2.json").c_str()), FP_OK);
  const fp_group_bounds gap[] = {{8, 10}, {12, 14}};
  EXPECT_EQ(fp_sweep_write_groups_json(a, gap, 2, path("g3.json").c_str()),
            FP_ERR_BOUNDARY);
  for (auto chart : {FP_CHART_CORRELATION, FP_CHART_MEAN, FP_CHART_VARIANCE}) {
    EXPECT_EQ(fp_sweep_write_svg(a, chart, path("s.svg").c_str()), FP_OK);
  }
  fp_sweep_free(a);
  fp_sweep_free(b);

  params.k_max = 301;
  fp_sweep* c = nullptr;
  EXPECT_EQ(fp_sweep_run(records, &params, &c), FP_ERR_INFEASIBLE_K);
  EXPECT_EQ(c, nullptr);
  fp_records_free(records);
}

TEST_F(CApi, FreeAcceptsNull) {
  fp_records_free(nullptr);
  fp_cleansing_free(nullptr);
  fp_domain_free(nullptr);
  fp_sweep_free(nullptr);
}
