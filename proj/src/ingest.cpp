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

#include "fatalpoint/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fatalpoint/csv.hpp"
#include "fatalpoint/error.hpp"

namespace fatalpoint {

namespace {

bool has_column(const std::vector<std::string>& header, const std::string& name) {
  return std::find(header.begin(), header.end(), name) != header.end();
}

void require_columns(const std::vector<std::string>& header,
                     const ColumnConfig& columns) {
  for (const auto* name : {&columns.id, &columns.longitude, &columns.latitude}) {
    if (!has_column(header, *name)) {
      throw Error(ErrorKind::Config, "configured column '" + *name +
                                         "' not found in CSV header");
    }
  }
}

std::vector<RawAccidentRow> to_raw_rows(csv::Table table) {
  std::vector<RawAccidentRow> out;
  out.reserve(table.rows.size());
  std::size_t index = 0;
  for (auto& row : table.rows) {
    RawAccidentRow raw;
    raw.row_index = ++index;
    raw.line = row.line;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      raw.fields.emplace(table.header[c], std::move(row.fields[c]));
    }
    out.push_back(std::move(raw));
  }
  return out;
}

}  // namespace

const char* to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::Unparseable: return "unparseable";
    case RejectReason::OutOfRange: return "sentinel/out-of-range";
  }
  return "unknown";
}

std::string Rejection::message() const {
  return std::string(to_string(reason)) + ": " + field + "='" + value + "'";
}

bool valid_longitude(double lon) noexcept {
  return std::isfinite(lon) && lon >= -180.0 && lon <= 180.0;
}

bool valid_latitude(double lat) noexcept {
  return std::isfinite(lat) && lat >= -90.0 && lat <= 90.0;
}

std::vector<RawAccidentRow> parse_accident_csv(std::istream& in,
                                               const ColumnConfig& columns) {
  auto table = csv::read(in);
  require_columns(table.header, columns);
  return to_raw_rows(std::move(table));
}

std::variant<CrashRecord, Rejection> validate_row(const RawAccidentRow& row,
                                                  const ColumnConfig& columns) {
  auto lookup = [&](const std::string& name) -> const std::string& {
    auto it = row.fields.find(name);
    if (it == row.fields.end()) {
      throw Error(ErrorKind::Config,
                  "configured column '" + name + "' missing from row " +
                      std::to_string(row.row_index));
    }
    return it->second;
  };

  CrashRecord rec;
  rec.record_id = lookup(columns.id);

  struct Coord {
    const std::string* column;
    double* target;
    bool (*in_range)(double) noexcept;
  };
  const Coord coords[] = {
      {&columns.longitude, &rec.longitude, &valid_longitude},
      {&columns.latitude, &rec.latitude, &valid_latitude},
  };
  for (const auto& coord : coords) {
    const auto& text = lookup(*coord.column);
    double v = 0.0;
    if (!csv::parse_double(text, v) || !std::isfinite(v)) {
      return Rejection{row.row_index, RejectReason::Unparseable, *coord.column,
                       text};
    }
    if (!coord.in_range(v)) {
      return Rejection{row.row_index, RejectReason::OutOfRange, *coord.column,
                       text};
    }
    *coord.target = v;
  }
  return rec;
}

CleanseResult cleanse(std::span<const RawAccidentRow> rows,
                      const ColumnConfig& columns) {
  CleanseResult out;
  out.report.total_rows = rows.size();
  for (const auto& row : rows) {
    auto result = validate_row(row, columns);
    if (auto* rec = std::get_if<CrashRecord>(&result)) {
      out.records.push_back(std::move(*rec));
    } else {
      out.report.rejected_rows.push_back(std::get<Rejection>(std::move(result)));
    }
  }
  out.report.accepted = out.records.size();
  out.report.rejected = out.report.rejected_rows.size();
  return out;
}

void write_records_csv(std::ostream& out, std::span<const CrashRecord> records) {
  out << "record_id,longitude,latitude\n";
  for (const auto& r : records) {
    out << csv::escape(r.record_id) << ',' << csv::format_shortest(r.longitude)
        << ',' << csv::format_shortest(r.latitude) << '\n';
  }
}

CleanseResult load_records(const std::filesystem::path& path,
                           const std::optional<ColumnConfig>& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  }
  auto table = csv::read(in);
  ColumnConfig chosen;
  if (columns) {
    chosen = *columns;
  } else {
    const auto canonical = ColumnConfig::canonical();
    const bool has_canonical = has_column(table.header, canonical.id) &&
                               has_column(table.header, canonical.longitude) &&
                               has_column(table.header, canonical.latitude);
    const bool has_fars = has_column(table.header, chosen.id) &&
                          has_column(table.header, chosen.longitude) &&
                          has_column(table.header, chosen.latitude);
    if (!has_fars && has_canonical) chosen = canonical;
  }
  require_columns(table.header, chosen);
  auto rows = to_raw_rows(std::move(table));
  return cleanse(rows, chosen);
}

}  // namespace fatalpoint
