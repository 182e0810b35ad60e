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

/*
 * C interface to the fatalpoint library.
 *
 * Every object is an opaque handle created by a function in this header and
 * released with the matching fp_*_free. Functions that can fail return an
 * fp_status; on failure fp_last_error() returns a message describing the
 * most recent failure on the calling thread. Handles are immutable once
 * created and may be read from several threads at once.
 */
#ifndef FATALPOINT_H
#define FATALPOINT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FATALPOINT_BUILDING)
#    define FP_API __declspec(dllexport)
#  else
#    define FP_API __declspec(dllimport)
#  endif
#else
#  define FP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_INVALID_ARGUMENT = 1,
  FP_ERR_CONFIG = 2,
  FP_ERR_PARSE = 3,
  FP_ERR_IO = 4,
  FP_ERR_NO_RECORDS = 5,
  FP_ERR_EMPTY_INPUT = 6,
  FP_ERR_INFEASIBLE_K = 7,
  FP_ERR_EMPTY_CLUSTER = 8,
  FP_ERR_ALIGNMENT = 9,
  FP_ERR_INVARIANT = 10,
  FP_ERR_UNDEFINED_CORRELATION = 11,
  FP_ERR_BOUNDARY = 12,
  FP_ERR_INTERNAL = 99
} fp_status;

FP_API const char* fp_version(void);
FP_API const char* fp_status_string(fp_status status);
/* Message for the last failed call on this thread; "" if none. */
FP_API const char* fp_last_error(void);

/* ---- records ----------------------------------------------------------- */

/* Column names for id / longitude / latitude. A NULL member falls back to
 * the FARS name (ST_CASE, LONGITUD, LATITUDE). Passing a NULL fp_columns
 * pointer instead auto-detects: FARS names first, then the canonical
 * record_id/longitude/latitude header. */
typedef struct fp_columns {
  const char* id;
  const char* longitude;
  const char* latitude;
} fp_columns;

typedef struct fp_record_set fp_record_set;
typedef struct fp_cleansing fp_cleansing;

/* Parses and cleanses a CSV file. `report` may be NULL. Succeeds with zero
 * accepted records; callers decide whether that is an error. */
FP_API fp_status fp_records_ingest(const char* path, const fp_columns* columns,
                                   fp_record_set** records,
                                   fp_cleansing** report);
FP_API size_t fp_records_count(const fp_record_set* records);
/* `id` stays valid for the lifetime of `records`. Any out pointer may be NULL. */
FP_API fp_status fp_records_get(const fp_record_set* records, size_t index,
                                const char** id, double* longitude,
                                double* latitude);
/* Canonical CSV: record_id,longitude,latitude. */
FP_API fp_status fp_records_write_csv(const fp_record_set* records,
                                      const char* path);
FP_API void fp_records_free(fp_record_set* records);

FP_API void fp_cleansing_counts(const fp_cleansing* report, size_t* total,
                                size_t* accepted, size_t* rejected);
FP_API fp_status fp_cleansing_write_json(const fp_cleansing* report,
                                         const char* path);
FP_API void fp_cleansing_free(fp_cleansing* report);

/* ---- synthetic data ---------------------------------------------------- */

typedef struct fp_synth_config {
  uint64_t seed;
  size_t n_points;
  double blob_stddev;     /* degrees */
  double corridor_stddev; /* degrees */
  int decimals;           /* coordinate rounding, <0 keeps full precision */
  /* Zero: North Carolina geometry (three city blobs, two corridors).
   * Non-zero: exactly the blobs and corridors below, possibly none. */
  int custom_geometry;
  const double* blob_centers; /* blob_count (lon, lat) pairs */
  size_t blob_count;
  const double* corridors;    /* corridor_count (lon0, lat0, lon1, lat1, weight) */
  size_t corridor_count;
} fp_synth_config;

FP_API void fp_synth_config_init(fp_synth_config* config);
FP_API fp_status fp_synth_generate(const fp_synth_config* config,
                                   fp_record_set** records);

/* ---- clustering and one domain ------------------------------------------ */

typedef enum fp_seeding {
  FP_SEEDING_KMEANSPP = 0,
  FP_SEEDING_UNIFORM = 1
} fp_seeding;

typedef struct fp_kmeans_params {
  uint64_t seed;
  size_t max_iterations;
  double convergence_tol;
  size_t restarts;
  fp_seeding seeding;
} fp_kmeans_params;

/* seed 20150101, 300 iterations, tolerance 1e-7 degrees, 10 restarts,
 * k-means++ seeding. */
FP_API void fp_kmeans_params_init(fp_kmeans_params* params);

typedef struct fp_domain fp_domain;

typedef struct fp_safety_row {
  size_t c;
  size_t f_c;
  double n_fc;
  size_t f_sc;
  double g; /* representative longitude */
  double t; /* representative latitude */
  double u_c;
  double n_uc;
} fp_safety_row;

/* Clusters the records with k clusters, detects every fatal point and builds
 * the safety table. `params` may be NULL for defaults. */
FP_API fp_status fp_domain_analyze(const fp_record_set* records, size_t k,
                                   const fp_kmeans_params* params,
                                   fp_domain** domain);
FP_API size_t fp_domain_k(const fp_domain* domain);
FP_API double fp_domain_wcss(const fp_domain* domain);
FP_API size_t fp_domain_iterations(const fp_domain* domain);
FP_API fp_status fp_domain_row(const fp_domain* domain, size_t index,
                               fp_safety_row* row);
FP_API fp_status fp_domain_write_table_csv(const fp_domain* domain,
                                           const char* path);
FP_API fp_status fp_domain_write_clusters_json(const fp_domain* domain,
                                               const char* path);
FP_API fp_status fp_domain_write_svg(const fp_domain* domain, const char* path);
FP_API void fp_domain_free(fp_domain* domain);

/* ---- k sweep ----------------------------------------------------------- */

typedef struct fp_sweep_params {
  size_t k_min;
  size_t k_max;
  size_t step;
  fp_kmeans_params clustering; /* seed is the template for per-k seeds */
  size_t threads;              /* 0: hardware concurrency */
} fp_sweep_params;

/* k = 8..128 step 1 with fp_kmeans_params_init clustering. */
FP_API void fp_sweep_params_init(fp_sweep_params* params);

typedef struct fp_sweep fp_sweep;

typedef struct fp_domain_stats {
  size_t k;
  int has_corr_fc_fsc;
  double corr_fc_fsc;
  int has_corr_nfc_nuc;
  double corr_nfc_nuc;
  double mean_nfc;
  double mean_nuc;
  double var_nfc;
  double var_nuc;
} fp_domain_stats;

typedef struct fp_group_bounds {
  size_t k_lo;
  size_t k_hi;
} fp_group_bounds;

typedef enum fp_sweep_chart {
  FP_CHART_CORRELATION = 0,
  FP_CHART_MEAN = 1,
  FP_CHART_VARIANCE = 2
} fp_sweep_chart;

FP_API fp_status fp_sweep_run(const fp_record_set* records,
                              const fp_sweep_params* params, fp_sweep** sweep);
FP_API size_t fp_sweep_count(const fp_sweep* sweep);
FP_API fp_status fp_sweep_stats(const fp_sweep* sweep, size_t index,
                                fp_domain_stats* stats);
/* FP_ERR_UNDEFINED_CORRELATION when fewer than two domains have both
 * correlations or a series is constant. */
FP_API fp_status fp_sweep_corr_of_corrs(const fp_sweep* sweep, double* value);
FP_API fp_status fp_sweep_write_csv(const fp_sweep* sweep, const char* path);
FP_API fp_status fp_sweep_write_json(const fp_sweep* sweep, const char* path);
/* NULL `bounds` uses (8,24),(25,40),(41,64),(65,128) clipped to the sweep
 * range. */
FP_API fp_status fp_sweep_write_groups_json(const fp_sweep* sweep,
                                            const fp_group_bounds* bounds,
                                            size_t count, const char* path);
FP_API fp_status fp_sweep_write_svg(const fp_sweep* sweep, fp_sweep_chart chart,
                                    const char* path);
FP_API void fp_sweep_free(fp_sweep* sweep);

#ifdef __cplusplus
}
#endif

#endif /* FATALPOINT_H */
