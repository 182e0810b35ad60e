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

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fatalpoint {

/// Which header names hold the record id and the coordinates.
struct ColumnConfig {
  std::string id = "ST_CASE";
  std::string longitude = "LONGITUD";
  std::string latitude = "LATITUDE";

  static ColumnConfig fars() { return {}; }
  static ColumnConfig canonical() {
    return {"record_id", "longitude", "latitude"};
  }
};

struct RawAccidentRow {
  std::size_t row_index = 0;  // 1-based data row
  std::size_t line = 0;       // physical line in the source
  std::map<std::string, std::string> fields;
};

struct CrashRecord {
  std::string record_id;
  double longitude = 0.0;  // west-negative
  double latitude = 0.0;   // north-positive

  bool operator==(const CrashRecord&) const = default;
};

enum class RejectReason { Unparseable, OutOfRange };

const char* to_string(RejectReason reason) noexcept;

struct Rejection {
  std::size_t row_index = 0;
  RejectReason reason = RejectReason::Unparseable;
  std::string field;  // column name
  std::string value;  // offending text

  std::string message() const;
};

struct CleansingReport {
  std::size_t total_rows = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<Rejection> rejected_rows;
};

struct CleanseResult {
  std::vector<CrashRecord> records;
  CleansingReport report;
};

bool valid_longitude(double lon) noexcept;
bool valid_latitude(double lat) noexcept;

/// One RawAccidentRow per data line, in file order. Coordinates are not
/// inspected here. Throws Error{Config} naming the first configured column
/// that is absent from the header, Error{Parse} on malformed lines.
std::vector<RawAccidentRow> parse_accident_csv(std::istream& in,
                                               const ColumnConfig& columns);

/// Range check rather than a sentinel list: anything outside
/// [-180, 180] x [-90, 90] is rejected, which covers 888.8888 / 999.9999
/// along with other out-of-band codes.
std::variant<CrashRecord, Rejection> validate_row(const RawAccidentRow& row,
                                                  const ColumnConfig& columns);

CleanseResult cleanse(std::span<const RawAccidentRow> rows,
                      const ColumnConfig& columns);

/// Canonical record CSV: record_id,longitude,latitude.
void write_records_csv(std::ostream& out, std::span<const CrashRecord> records);

/// Opens `path`, picks columns and cleanses. Without an explicit mapping the
/// FARS names are tried first, then the canonical ones.
CleanseResult load_records(const std::filesystem::path& path,
                           const std::optional<ColumnConfig>& columns);

}  // namespace fatalpoint
