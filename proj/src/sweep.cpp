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

#include "fatalpoint/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "fatalpoint/error.hpp"
#include "fatalpoint/random.hpp"

namespace fatalpoint {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::InvalidArgument, "pearson: series lengths differ");
  }
  if (x.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "pearson: need at least two pairs");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::UndefinedCorrelation,
                "pearson: a series has zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double mean(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "mean of nothing");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double population_variance(std::span<const double> values) {
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return ss / static_cast<double>(values.size());
}

std::vector<std::size_t> SweepParams::ks() const {
  if (k_min == 0 || k_min > k_max || step == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "sweep range needs 1 <= k_min <= k_max and step >= 1");
  }
  std::vector<std::size_t> out;
  for (std::size_t k = k_min; k <= k_max; k += step) out.push_back(k);
  return out;
}

KMeansParams params_for_k(const SweepParams& params, std::size_t k) {
  KMeansParams p = params.clustering;
  p.k = k;
  p.rng_seed = random::derive_seed(params.clustering.rng_seed, k);
  return p;
}

DomainAnalysis analyze_domain(std::span<const CrashRecord> records,
                              const KMeansParams& params,
                              const IterationObserver& observer) {
  const auto points = to_points(records);
  DomainAnalysis out;
  out.domain = run_kmeans(points, params, observer);
  out.fatal_points = detect_fatal_points(out.domain, records);
  out.table = build_domain_table(out.domain, out.fatal_points);
  return out;
}

namespace {

std::optional<double> try_pearson(std::span<const double> x,
                                  std::span<const double> y) {
  try {
    return pearson(x, y);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UndefinedCorrelation ||
        e.kind() == ErrorKind::InvalidArgument) {
      return std::nullopt;
    }
    throw;
  }
}

}  // namespace

DomainStats domain_stats(const DomainTable& table) {
  if (table.rows.empty()) throw Error(ErrorKind::EmptyInput, "empty domain table");
  std::vector<double> fc, fsc, nfc, nuc;
  for (const auto& r : table.rows) {
    fc.push_back(static_cast<double>(r.crash_frequency));
    fsc.push_back(static_cast<double>(r.fatal_frequency));
    nfc.push_back(r.normalized_frequency);
    nuc.push_back(r.normalized_ratio);
  }
  DomainStats s;
  s.k = table.k;
  s.corr_fc_fsc = try_pearson(fc, fsc);
  s.corr_nfc_nuc = try_pearson(nfc, nuc);
  s.mean_nfc = mean(nfc);
  s.mean_nuc = mean(nuc);
  s.var_nfc = population_variance(nfc);
  s.var_nuc = population_variance(nuc);
  return s;
}

double correlation_of_correlations(std::span<const DomainStats> domains) {
  std::vector<double> a, b;
  for (const auto& d : domains) {
    if (d.corr_fc_fsc && d.corr_nfc_nuc) {
      a.push_back(*d.corr_fc_fsc);
      b.push_back(*d.corr_nfc_nuc);
    }
  }
  if (a.size() < 2) {
    throw Error(ErrorKind::UndefinedCorrelation,
                "correlation of correlations needs at least two domains, have " +
                    std::to_string(a.size()));
  }
  return pearson(a, b);
}

SweepResult run_sweep(std::span<const CrashRecord> records,
                      const SweepParams& params) {
  const auto ks = params.ks();
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records to sweep");
  const auto points = to_points(records);
  const auto distinct = count_distinct(points);
  if (ks.back() > distinct) {
    throw Error(ErrorKind::InfeasibleK,
                "k_max=" + std::to_string(ks.back()) + " exceeds the " +
                    std::to_string(distinct) + " distinct locations");
  }

  std::vector<DomainStats> stats(ks.size());
  std::vector<std::exception_ptr> errors(ks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ks.size(); i = next++) {
      try {
        const auto analysis =
            analyze_domain(records, params_for_k(params, ks[i]), params.observer);
        stats[i] = domain_stats(analysis.table);
        stats[i].iterations = analysis.domain.iterations_used;
        stats[i].wcss = analysis.domain.wcss;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = params.threads != 0
                            ? params.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, ks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result;
  result.params = params;
  result.domains = std::move(stats);
  try {
    result.corr_of_corrs = correlation_of_correlations(result.domains);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UndefinedCorrelation) throw;
  }
  return result;
}

std::vector<GroupBoundary> default_group_boundaries() {
  return {{8, 24}, {25, 40}, {41, 64}, {65, 128}};
}

std::vector<GroupBoundary> clip_boundaries(std::span<const GroupBoundary> boundaries,
                                           std::size_t k_min, std::size_t k_max) {
  std::vector<GroupBoundary> out;
  for (const auto& b : boundaries) {
    const auto lo = std::max(b.k_lo, k_min);
    const auto hi = std::min(b.k_hi, k_max);
    if (lo <= hi) out.push_back({lo, hi});
  }
  return out;
}

GroupSummary group_summary(const SweepResult& sweep,
                           std::span<const GroupBoundary> boundaries) {
  if (boundaries.empty()) throw Error(ErrorKind::Boundary, "no groups given");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const auto& b = boundaries[i];
    if (b.k_lo > b.k_hi) {
      throw Error(ErrorKind::Boundary, "group " + std::to_string(i + 1) +
                                           " has k_lo > k_hi");
    }
    if (i > 0 && b.k_lo != boundaries[i - 1].k_hi + 1) {
      throw Error(ErrorKind::Boundary,
                  b.k_lo <= boundaries[i - 1].k_hi
                      ? "groups " + std::to_string(i) + " and " +
                            std::to_string(i + 1) + " overlap"
                      : "gap between groups " + std::to_string(i) + " and " +
                            std::to_string(i + 1));
    }
  }
  const auto& p = sweep.params;
  if (boundaries.front().k_lo > p.k_min || boundaries.back().k_hi < p.k_max) {
    throw Error(ErrorKind::Boundary, "groups do not cover k = " +
                                         std::to_string(p.k_min) + ".." +
                                         std::to_string(p.k_max));
  }

  GroupSummary summary;
  for (const auto& b : boundaries) {
    GroupStats g;
    g.bounds = b;
    std::vector<double> nfc, nuc;
    for (const auto& d : sweep.domains) {
      if (d.k >= b.k_lo && d.k <= b.k_hi) {
        nfc.push_back(d.mean_nfc);
        nuc.push_back(d.mean_nuc);
      }
    }
    g.domains = nfc.size();
    if (!nfc.empty()) {
      g.mean_of_mean_nfc = mean(nfc);
      g.var_of_mean_nfc = population_variance(nfc);
      g.mean_of_mean_nuc = mean(nuc);
      g.var_of_mean_nuc = population_variance(nuc);
    }
    summary.groups.push_back(g);
  }
  return summary;
}

}  // namespace fatalpoint
