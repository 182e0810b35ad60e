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

// fatalpoint command-line tool. Talks to the library only through the C API.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fatalpoint/fatalpoint.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Records = std::unique_ptr<fp_record_set, Deleter<fp_record_set, fp_records_free>>;
using Cleansing = std::unique_ptr<fp_cleansing, Deleter<fp_cleansing, fp_cleansing_free>>;
using Domain = std::unique_ptr<fp_domain, Deleter<fp_domain, fp_domain_free>>;
using Sweep = std::unique_ptr<fp_sweep, Deleter<fp_sweep, fp_sweep_free>>;

// Thrown to unwind to main with an exit code already decided.
struct Exit {
  int code;
};

int exit_code_for(fp_status status) {
  switch (status) {
    case FP_OK: return kExitOk;
    case FP_ERR_INVALID_ARGUMENT:
    case FP_ERR_CONFIG:
    case FP_ERR_BOUNDARY: return kExitUsage;
    default: return kExitData;
  }
}

void check(fp_status status, const std::string& context) {
  if (status == FP_OK) return;
  std::cerr << "fatalpoint: " << context << ": " << fp_status_string(status);
  const std::string detail = fp_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  throw Exit{exit_code_for(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "fatalpoint: " << message << '\n';
  throw Exit{kExitUsage};
}

struct Options {
  std::string input;
  std::string out_dir = ".";
  std::uint64_t seed = 20150101;
  std::string formats = "csv,json";
  std::string col_id, col_lon, col_lat;
  std::string config;

  // clustering
  std::size_t restarts = 10;
  std::size_t max_iterations = 300;
  double tolerance = 1e-7;
  std::string seeding = "kmeanspp";

  // analyze
  std::size_t k = 16;

  // sweep
  std::size_t k_min = 8;
  std::size_t k_max = 128;
  std::size_t step = 1;
  std::size_t threads = 0;
  std::string groups;

  // synth
  std::size_t n_points = 1263;
  double blob_stddev = 0.15;
  double corridor_stddev = 0.03;
  int decimals = 4;
};

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "csv" && item != "json" && item != "svg") {
      usage_error("unknown format '" + item + "' (expected csv, json, svg)");
    }
    out.insert(item);
  }
  if (out.empty()) usage_error("--formats must name at least one format");
  return out;
}

std::vector<fp_group_bounds> parse_groups(const std::string& text) {
  std::vector<fp_group_bounds> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) usage_error("group '" + item + "' is not lo-hi");
    try {
      out.push_back({std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1))});
    } catch (const std::exception&) {
      usage_error("group '" + item + "' is not lo-hi");
    }
  }
  return out;
}

// Flat "key = value" lines; '#' starts a comment. Keys are long option names
// without the leading dashes.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      usage_error(path + ":" + std::to_string(number) + ": expected key = value");
    }
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out[trim(line.substr(0, eq))] = value;
  }
  return out;
}

// Fills options left unset on the command line from the config file.
void apply_config(CLI::App& app, const std::map<std::string, std::string>& config) {
  // Only options of the main app and the chosen subcommand take values.
  std::map<std::string, std::vector<CLI::Option*>> by_name;
  std::map<std::string, std::vector<CLI::Option*>> active;
  std::vector<CLI::App*> apps{&app};
  for (auto* sub : app.get_subcommands({})) apps.push_back(sub);
  for (auto* a : apps) {
    const bool chosen = a == &app || a->parsed();
    for (auto* opt : a->get_options()) {
      if (opt->get_lnames().empty()) continue;
      by_name[opt->get_lnames().front()].push_back(opt);
      if (chosen) active[opt->get_lnames().front()].push_back(opt);
    }
  }

  for (const auto& [key, value] : config) {
    auto it = by_name.find(key);
    if (it == by_name.end() || key == "config" || key == "help") {
      usage_error("unknown config key '" + key + "'");
    }
    for (auto* opt : active[key]) {
      if (opt->count() > 0) continue;
      try {
        opt->add_result(value);
        opt->run_callback();
      } catch (const CLI::Error& e) {
        usage_error("config key '" + key + "': " + e.what());
      }
    }
  }
}

fp_columns columns_from(const Options& o, bool& any) {
  any = !o.col_id.empty() || !o.col_lon.empty() || !o.col_lat.empty();
  return fp_columns{o.col_id.empty() ? nullptr : o.col_id.c_str(),
                    o.col_lon.empty() ? nullptr : o.col_lon.c_str(),
                    o.col_lat.empty() ? nullptr : o.col_lat.c_str()};
}

fp_kmeans_params clustering_from(const Options& o) {
  fp_kmeans_params p;
  fp_kmeans_params_init(&p);
  p.seed = o.seed;
  p.restarts = o.restarts;
  p.max_iterations = o.max_iterations;
  p.convergence_tol = o.tolerance;
  if (o.seeding == "uniform") {
    p.seeding = FP_SEEDING_UNIFORM;
  } else if (o.seeding != "kmeanspp") {
    usage_error("unknown seeding '" + o.seeding + "' (expected kmeanspp, uniform)");
  }
  return p;
}

fs::path prepare_out_dir(const Options& o) {
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec || !fs::is_directory(o.out_dir)) {
    std::cerr << "fatalpoint: cannot create output directory '" << o.out_dir << "'\n";
    throw Exit{kExitData};
  }
  return o.out_dir;
}

Records load(const Options& o, Cleansing* report) {
  if (o.input.empty()) usage_error("--input is required");
  bool explicit_columns = false;
  const auto columns = columns_from(o, explicit_columns);
  fp_record_set* raw = nullptr;
  fp_cleansing* rep = nullptr;
  check(fp_records_ingest(o.input.c_str(), explicit_columns ? &columns : nullptr, &raw,
                          report ? &rep : nullptr),
        "reading '" + o.input + "'");
  Records records(raw);
  if (report) report->reset(rep);
  if (fp_records_count(records.get()) == 0) {
    std::cerr << "fatalpoint: no usable records in '" << o.input << "'\n";
    throw Exit{kExitData};
  }
  return records;
}

int cmd_ingest(const Options& o) {
  const auto formats = parse_formats(o.formats);
  Cleansing report;
  if (o.input.empty()) usage_error("--input is required");
  bool explicit_columns = false;
  const auto columns = columns_from(o, explicit_columns);
  fp_record_set* raw = nullptr;
  fp_cleansing* rep = nullptr;
  check(fp_records_ingest(o.input.c_str(), explicit_columns ? &columns : nullptr, &raw, &rep),
        "reading '" + o.input + "'");
  Records records(raw);
  report.reset(rep);

  std::size_t total = 0, accepted = 0, rejected = 0;
  fp_cleansing_counts(report.get(), &total, &accepted, &rejected);
  const auto dir = prepare_out_dir(o);
  if (formats.count("json")) {
    check(fp_cleansing_write_json(report.get(), (dir / "cleansing.json").c_str()),
          "writing cleansing.json");
  }
  std::cout << "rows " << total << ", accepted " << accepted << ", rejected "
            << rejected << '\n';
  if (accepted == 0) {
    std::cerr << "fatalpoint: no usable records\n";
    return kExitData;
  }
  if (formats.count("csv")) {
    check(fp_records_write_csv(records.get(), (dir / "records.csv").c_str()),
          "writing records.csv");
  }
  return kExitOk;
}

int cmd_synth(const Options& o) {
  fp_synth_config cfg;
  fp_synth_config_init(&cfg);
  cfg.seed = o.seed;
  cfg.n_points = o.n_points;
  cfg.blob_stddev = o.blob_stddev;
  cfg.corridor_stddev = o.corridor_stddev;
  cfg.decimals = o.decimals;
  fp_record_set* raw = nullptr;
  check(fp_synth_generate(&cfg, &raw), "generating synthetic records");
  Records records(raw);
  const auto dir = prepare_out_dir(o);
  check(fp_records_write_csv(records.get(), (dir / "records.csv").c_str()),
        "writing records.csv");
  std::cout << "wrote " << fp_records_count(records.get()) << " records to "
            << (dir / "records.csv").string() << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o) {
  const auto formats = parse_formats(o.formats);
  const auto params = clustering_from(o);
  auto records = load(o, nullptr);
  fp_domain* raw = nullptr;
  check(fp_domain_analyze(records.get(), o.k, &params, &raw),
        "clustering with k=" + std::to_string(o.k));
  Domain domain(raw);

  const auto dir = prepare_out_dir(o);
  const auto stem = "_k" + std::to_string(o.k);
  if (formats.count("csv")) {
    check(fp_domain_write_table_csv(domain.get(), (dir / ("domain" + stem + ".csv")).c_str()),
          "writing domain table");
  }
  if (formats.count("json")) {
    check(fp_domain_write_clusters_json(domain.get(),
                                        (dir / ("clusters" + stem + ".json")).c_str()),
          "writing cluster JSON");
  }
  if (formats.count("svg")) {
    check(fp_domain_write_svg(domain.get(), (dir / ("clusters" + stem + ".svg")).c_str()),
          "writing cluster SVG");
  }

  std::printf("%4s %6s %8s %6s %22s %10s %8s\n", "c", "f_c", "N(f_c)", "f_sc",
              "(g, t)", "u_c", "N(u_c)");
  for (std::size_t i = 0; i < fp_domain_k(domain.get()); ++i) {
    fp_safety_row row;
    check(fp_domain_row(domain.get(), i, &row), "reading table row");
    std::printf("%4zu %6zu %8.4f %6zu  (%9.4f, %8.4f) %10.4f %8.4f\n", row.c, row.f_c,
                row.n_fc, row.f_sc, row.g, row.t, row.u_c, row.n_uc);
  }
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  const auto formats = parse_formats(o.formats);
  fp_sweep_params params;
  fp_sweep_params_init(&params);
  params.k_min = o.k_min;
  params.k_max = o.k_max;
  params.step = o.step;
  params.threads = o.threads;
  params.clustering = clustering_from(o);
  const auto groups = o.groups.empty() ? std::vector<fp_group_bounds>{}
                                       : parse_groups(o.groups);

  auto records = load(o, nullptr);
  fp_sweep* raw = nullptr;
  check(fp_sweep_run(records.get(), &params, &raw), "running sweep");
  Sweep sweep(raw);

  const auto dir = prepare_out_dir(o);
  if (formats.count("csv")) {
    check(fp_sweep_write_csv(sweep.get(), (dir / "sweep.csv").c_str()), "writing sweep.csv");
  }
  if (formats.count("json")) {
    check(fp_sweep_write_json(sweep.get(), (dir / "sweep.json").c_str()),
          "writing sweep.json");
    check(fp_sweep_write_groups_json(sweep.get(), groups.empty() ? nullptr : groups.data(),
                                     groups.size(), (dir / "groups.json").c_str()),
          "writing groups.json");
  }
  if (formats.count("svg")) {
    check(fp_sweep_write_svg(sweep.get(), FP_CHART_CORRELATION,
                             (dir / "sweep_corr.svg").c_str()),
          "writing sweep_corr.svg");
    check(fp_sweep_write_svg(sweep.get(), FP_CHART_MEAN, (dir / "sweep_mean.svg").c_str()),
          "writing sweep_mean.svg");
    check(fp_sweep_write_svg(sweep.get(), FP_CHART_VARIANCE,
                             (dir / "sweep_var.svg").c_str()),
          "writing sweep_var.svg");
  }

  std::cout << "domains " << fp_sweep_count(sweep.get()) << '\n';
  double coc = 0.0;
  if (fp_sweep_corr_of_corrs(sweep.get(), &coc) == FP_OK) {
    std::cout << "corr_of_corrs " << coc << '\n';
  } else {
    std::cout << "corr_of_corrs undefined\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Fatal point detection and crash-safety ratio analytics"};
  app.set_version_flag("--version", std::string(fp_version()));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--input", o.input, "Input CSV (FARS accident file or records.csv)");
  app.add_option("--out-dir", o.out_dir, "Directory for output files")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--formats", o.formats, "Comma list of csv,json,svg")->capture_default_str();
  app.add_option("--col-id", o.col_id, "Record id column (default ST_CASE)");
  app.add_option("--col-lon", o.col_lon, "Longitude column (default LONGITUD)");
  app.add_option("--col-lat", o.col_lat, "Latitude column (default LATITUDE)");
  app.add_option("--config", o.config, "Flat key = value config file");

  auto add_clustering = [&](CLI::App* sub) {
    sub->add_option("--restarts", o.restarts, "k-means restarts")->capture_default_str();
    sub->add_option("--max-iter", o.max_iterations, "Lloyd iteration cap")->capture_default_str();
    sub->add_option("--tol", o.tolerance, "Centroid shift tolerance, degrees")->capture_default_str();
    sub->add_option("--seeding", o.seeding, "kmeanspp or uniform")->capture_default_str();
  };

  auto* ingest = app.add_subcommand("ingest", "Cleanse a FARS-style accident CSV");
  auto* synth = app.add_subcommand("synth", "Generate synthetic crash records");
  synth->add_option("--n-points", o.n_points, "Number of records")->capture_default_str();
  synth->add_option("--blob-stddev", o.blob_stddev, "City blob spread, degrees")->capture_default_str();
  synth->add_option("--corridor-stddev", o.corridor_stddev, "Corridor jitter, degrees")->capture_default_str();
  synth->add_option("--decimals", o.decimals, "Coordinate decimals (-1: full)")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Cluster once and build the safety table");
  analyze->add_option("--k", o.k, "Number of clusters")->capture_default_str();
  add_clustering(analyze);

  auto* sweep = app.add_subcommand("sweep", "Analyze every k in a range");
  sweep->add_option("--k-min", o.k_min, "Smallest k")->capture_default_str();
  sweep->add_option("--k-max", o.k_max, "Largest k")->capture_default_str();
  sweep->add_option("--step", o.step, "k increment")->capture_default_str();
  sweep->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
  sweep->add_option("--groups", o.groups, "Group ranges, e.g. 8-24,25-40,41-64,65-128");
  add_clustering(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!o.config.empty()) apply_config(app, read_config(o.config));
    if (ingest->parsed()) return cmd_ingest(o);
    if (synth->parsed()) return cmd_synth(o);
    if (analyze->parsed()) return cmd_analyze(o);
    if (sweep->parsed()) return cmd_sweep(o);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
