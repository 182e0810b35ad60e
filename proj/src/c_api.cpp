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

#include "fatalpoint/fatalpoint.h"

#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fatalpoint/error.hpp"
#include "fatalpoint/ingest.hpp"
#include "fatalpoint/report.hpp"
#include "fatalpoint/sweep.hpp"
#include "fatalpoint/synth.hpp"

struct fp_record_set {
  std::vector<fatalpoint::CrashRecord> records;
};

struct fp_cleansing {
  fatalpoint::CleansingReport report;
};

struct fp_domain {
  std::vector<fatalpoint::CrashRecord> records;
  fatalpoint::DomainAnalysis analysis;
};

struct fp_sweep {
  fatalpoint::SweepResult result;
};

namespace {

using fatalpoint::Error;
using fatalpoint::ErrorKind;

thread_local std::string last_error;

fp_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return FP_ERR_INVALID_ARGUMENT;
    case ErrorKind::Config: return FP_ERR_CONFIG;
    case ErrorKind::Parse: return FP_ERR_PARSE;
    case ErrorKind::Io: return FP_ERR_IO;
    case ErrorKind::NoRecords: return FP_ERR_NO_RECORDS;
    case ErrorKind::EmptyInput: return FP_ERR_EMPTY_INPUT;
    case ErrorKind::InfeasibleK: return FP_ERR_INFEASIBLE_K;
    case ErrorKind::EmptyCluster: return FP_ERR_EMPTY_CLUSTER;
    case ErrorKind::Alignment: return FP_ERR_ALIGNMENT;
    case ErrorKind::Invariant: return FP_ERR_INVARIANT;
    case ErrorKind::UndefinedCorrelation: return FP_ERR_UNDEFINED_CORRELATION;
    case ErrorKind::Boundary: return FP_ERR_BOUNDARY;
    case ErrorKind::OracleScope: return FP_ERR_INVALID_ARGUMENT;
  }
  return FP_ERR_INTERNAL;
}

fp_status fail(fp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
fp_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FP_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FP_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
  }
}

template <typename Writer>
void write_file(const char* path, Writer&& writer) {
  require(path, "path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, std::string("cannot write '") + path + "'");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, std::string("failed writing '") + path + "'");
}

fatalpoint::KMeansParams to_cpp(const fp_kmeans_params* p) {
  fatalpoint::KMeansParams out;
  if (p == nullptr) return out;
  out.rng_seed = p->seed;
  out.max_iterations = p->max_iterations;
  out.convergence_tol = p->convergence_tol;
  out.restarts = p->restarts;
  out.seeding = p->seeding == FP_SEEDING_UNIFORM ? fatalpoint::Seeding::UniformRandom
                                                 : fatalpoint::Seeding::KMeansPlusPlus;
  return out;
}

}  // namespace

extern "C" {

const char* fp_version(void) { return FATALPOINT_VERSION; }

const char* fp_status_string(fp_status status) {
  switch (status) {
    case FP_OK: return "ok";
    case FP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FP_ERR_CONFIG: return "configuration error";
    case FP_ERR_PARSE: return "parse error";
    case FP_ERR_IO: return "i/o error";
    case FP_ERR_NO_RECORDS: return "no usable records";
    case FP_ERR_EMPTY_INPUT: return "empty input";
    case FP_ERR_INFEASIBLE_K: return "infeasible k";
    case FP_ERR_EMPTY_CLUSTER: return "empty cluster";
    case FP_ERR_ALIGNMENT: return "alignment error";
    case FP_ERR_INVARIANT: return "invariant violation";
    case FP_ERR_UNDEFINED_CORRELATION: return "undefined correlation";
    case FP_ERR_BOUNDARY: return "boundary error";
    case FP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fp_last_error(void) { return last_error.c_str(); }

fp_status fp_records_ingest(const char* path, const fp_columns* columns,
                            fp_record_set** records, fp_cleansing** report) {
  return guarded([&] {
    require(path, "path");
    require(records, "records");
    std::optional<fatalpoint::ColumnConfig> cfg;
    if (columns != nullptr) {
      cfg.emplace();
      if (columns->id) cfg->id = columns->id;
      if (columns->longitude) cfg->longitude = columns->longitude;
      if (columns->latitude) cfg->latitude = columns->latitude;
    }
    auto result = fatalpoint::load_records(path, cfg);
    auto set = std::make_unique<fp_record_set>();
    set->records = std::move(result.records);
    std::unique_ptr<fp_cleansing> rep;
    if (report) {
      rep = std::make_unique<fp_cleansing>();
      rep->report = std::move(result.report);
    }
    *records = set.release();
    if (report) *report = rep.release();
  });
}

size_t fp_records_count(const fp_record_set* records) {
  return records ? records->records.size() : 0;
}

fp_status fp_records_get(const fp_record_set* records, size_t index,
                         const char** id, double* longitude, double* latitude) {
  return guarded([&] {
    require(records, "records");
    if (index >= records->records.size()) {
      throw Error(ErrorKind::InvalidArgument, "record index out of range");
    }
    const auto& r = records->records[index];
    if (id) *id = r.record_id.c_str();
    if (longitude) *longitude = r.longitude;
    if (latitude) *latitude = r.latitude;
  });
}

fp_status fp_records_write_csv(const fp_record_set* records, const char* path) {
  return guarded([&] {
    require(records, "records");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::write_records_csv(out, records->records);
    });
  });
}

void fp_records_free(fp_record_set* records) { delete records; }

void fp_cleansing_counts(const fp_cleansing* report, size_t* total,
                         size_t* accepted, size_t* rejected) {
  if (report == nullptr) return;
  if (total) *total = report->report.total_rows;
  if (accepted) *accepted = report->report.accepted;
  if (rejected) *rejected = report->report.rejected;
}

fp_status fp_cleansing_write_json(const fp_cleansing* report, const char* path) {
  return guarded([&] {
    require(report, "report");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_json(out, fatalpoint::report::to_json(report->report));
    });
  });
}

void fp_cleansing_free(fp_cleansing* report) { delete report; }

void fp_synth_config_init(fp_synth_config* config) {
  if (config == nullptr) return;
  const auto defaults = fatalpoint::SynthConfig::north_carolina();
  *config = fp_synth_config{};
  config->seed = defaults.seed;
  config->n_points = defaults.n_points;
  config->blob_stddev = defaults.blob_stddev;
  config->corridor_stddev = defaults.corridor_stddev;
  config->decimals = defaults.decimals;
}

fp_status fp_synth_generate(const fp_synth_config* config, fp_record_set** records) {
  return guarded([&] {
    require(config, "config");
    require(records, "records");
    auto cfg = fatalpoint::SynthConfig::north_carolina();
    cfg.seed = config->seed;
    cfg.n_points = config->n_points;
    cfg.blob_stddev = config->blob_stddev;
    cfg.corridor_stddev = config->corridor_stddev;
    cfg.decimals = config->decimals;
    if (config->custom_geometry) {
      cfg.blob_centers.clear();
      cfg.corridor_segments.clear();
      if (config->blob_count) require(config->blob_centers, "blob_centers");
      if (config->corridor_count) require(config->corridors, "corridors");
      for (size_t i = 0; i < config->blob_count; ++i) {
        cfg.blob_centers.push_back(
            {config->blob_centers[2 * i], config->blob_centers[2 * i + 1]});
      }
      for (size_t i = 0; i < config->corridor_count; ++i) {
        const double* c = config->corridors + 5 * i;
        cfg.corridor_segments.push_back({{c[0], c[1]}, {c[2], c[3]}, c[4]});
      }
    }
    auto set = std::make_unique<fp_record_set>();
    set->records = fatalpoint::generate(cfg);
    *records = set.release();
  });
}

void fp_kmeans_params_init(fp_kmeans_params* params) {
  if (params == nullptr) return;
  const fatalpoint::KMeansParams d;
  params->seed = d.rng_seed;
  params->max_iterations = d.max_iterations;
  params->convergence_tol = d.convergence_tol;
  params->restarts = d.restarts;
  params->seeding = FP_SEEDING_KMEANSPP;
}

fp_status fp_domain_analyze(const fp_record_set* records, size_t k,
                            const fp_kmeans_params* params, fp_domain** domain) {
  return guarded([&] {
    require(records, "records");
    require(domain, "domain");
    auto p = to_cpp(params);
    p.k = k;
    auto d = std::make_unique<fp_domain>();
    d->records = records->records;
    d->analysis = fatalpoint::analyze_domain(d->records, p);
    *domain = d.release();
  });
}

size_t fp_domain_k(const fp_domain* domain) {
  return domain ? domain->analysis.domain.k : 0;
}

double fp_domain_wcss(const fp_domain* domain) {
  return domain ? domain->analysis.domain.wcss : 0.0;
}

size_t fp_domain_iterations(const fp_domain* domain) {
  return domain ? domain->analysis.domain.iterations_used : 0;
}

fp_status fp_domain_row(const fp_domain* domain, size_t index, fp_safety_row* row) {
  return guarded([&] {
    require(domain, "domain");
    require(row, "row");
    const auto& rows = domain->analysis.table.rows;
    if (index >= rows.size()) {
      throw Error(ErrorKind::InvalidArgument, "row index out of range");
    }
    const auto& r = rows[index];
    *row = fp_safety_row{r.cluster_id,       r.crash_frequency,
                         r.normalized_frequency, r.fatal_frequency,
                         r.representative.x, r.representative.y,
                         r.safety_ratio,     r.normalized_ratio};
  });
}

fp_status fp_domain_write_table_csv(const fp_domain* domain, const char* path) {
  return guarded([&] {
    require(domain, "domain");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::write_domain_table_csv(out, domain->analysis.table);
    });
  });
}

fp_status fp_domain_write_clusters_json(const fp_domain* domain, const char* path) {
  return guarded([&] {
    require(domain, "domain");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_json(
          out, fatalpoint::report::to_json(domain->analysis.domain, domain->records,
                                           domain->analysis.fatal_points));
    });
  });
}

fp_status fp_domain_write_svg(const fp_domain* domain, const char* path) {
  return guarded([&] {
    require(domain, "domain");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_cluster_svg(out, domain->analysis.domain,
                                            domain->records,
                                            domain->analysis.fatal_points);
    });
  });
}

void fp_domain_free(fp_domain* domain) { delete domain; }

void fp_sweep_params_init(fp_sweep_params* params) {
  if (params == nullptr) return;
  const fatalpoint::SweepParams d;
  params->k_min = d.k_min;
  params->k_max = d.k_max;
  params->step = d.step;
  fp_kmeans_params_init(&params->clustering);
  params->threads = d.threads;
}

fp_status fp_sweep_run(const fp_record_set* records, const fp_sweep_params* params,
                       fp_sweep** sweep) {
  return guarded([&] {
    require(records, "records");
    require(sweep, "sweep");
    fatalpoint::SweepParams p;
    if (params) {
      p.k_min = params->k_min;
      p.k_max = params->k_max;
      p.step = params->step;
      p.clustering = to_cpp(&params->clustering);
      p.threads = params->threads;
    }
    auto s = std::make_unique<fp_sweep>();
    s->result = fatalpoint::run_sweep(records->records, p);
    *sweep = s.release();
  });
}

size_t fp_sweep_count(const fp_sweep* sweep) {
  return sweep ? sweep->result.domains.size() : 0;
}

fp_status fp_sweep_stats(const fp_sweep* sweep, size_t index, fp_domain_stats* stats) {
  return guarded([&] {
    require(sweep, "sweep");
    require(stats, "stats");
    const auto& domains = sweep->result.domains;
    if (index >= domains.size()) {
      throw Error(ErrorKind::InvalidArgument, "domain index out of range");
    }
    const auto& d = domains[index];
    *stats = fp_domain_stats{};
    stats->k = d.k;
    stats->has_corr_fc_fsc = d.corr_fc_fsc.has_value();
    stats->corr_fc_fsc = d.corr_fc_fsc.value_or(0.0);
    stats->has_corr_nfc_nuc = d.corr_nfc_nuc.has_value();
    stats->corr_nfc_nuc = d.corr_nfc_nuc.value_or(0.0);
    stats->mean_nfc = d.mean_nfc;
    stats->mean_nuc = d.mean_nuc;
    stats->var_nfc = d.var_nfc;
    stats->var_nuc = d.var_nuc;
  });
}

fp_status fp_sweep_corr_of_corrs(const fp_sweep* sweep, double* value) {
  return guarded([&] {
    require(sweep, "sweep");
    require(value, "value");
    *value = fatalpoint::correlation_of_correlations(sweep->result.domains);
  });
}

fp_status fp_sweep_write_csv(const fp_sweep* sweep, const char* path) {
  return guarded([&] {
    require(sweep, "sweep");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_sweep_csv(out, sweep->result);
    });
  });
}

fp_status fp_sweep_write_json(const fp_sweep* sweep, const char* path) {
  return guarded([&] {
    require(sweep, "sweep");
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_json(out, fatalpoint::report::to_json(sweep->result));
    });
  });
}

fp_status fp_sweep_write_groups_json(const fp_sweep* sweep,
                                     const fp_group_bounds* bounds, size_t count,
                                     const char* path) {
  return guarded([&] {
    require(sweep, "sweep");
    const auto& p = sweep->result.params;
    std::vector<fatalpoint::GroupBoundary> groups;
    if (bounds == nullptr) {
      groups = fatalpoint::clip_boundaries(fatalpoint::default_group_boundaries(),
                                           p.k_min, p.k_max);
      if (groups.empty()) groups.push_back({p.k_min, p.k_max});
    } else {
      for (size_t i = 0; i < count; ++i) {
        groups.push_back({bounds[i].k_lo, bounds[i].k_hi});
      }
    }
    const auto summary = fatalpoint::group_summary(sweep->result, groups);
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_json(out, fatalpoint::report::to_json(summary));
    });
  });
}

fp_status fp_sweep_write_svg(const fp_sweep* sweep, fp_sweep_chart chart,
                             const char* path) {
  return guarded([&] {
    require(sweep, "sweep");
    fatalpoint::report::SweepChart kind = fatalpoint::report::SweepChart::Correlation;
    if (chart == FP_CHART_MEAN) kind = fatalpoint::report::SweepChart::Mean;
    if (chart == FP_CHART_VARIANCE) kind = fatalpoint::report::SweepChart::Variance;
    write_file(path, [&](std::ostream& out) {
      fatalpoint::report::write_sweep_svg(out, sweep->result, kind);
    });
  });
}

void fp_sweep_free(fp_sweep* sweep) { delete sweep; }

}  // extern "C"
