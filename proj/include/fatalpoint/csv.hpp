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

// Minimal RFC-4180 reader/writer plus the number formatting every emitter
// shares.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fatalpoint::csv {

struct Row {
  std::size_t line = 0;  // 1-based physical line where the record starts
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

/// Reads a header-bearing CSV. Quoted fields may contain commas, doubled
/// quotes and line breaks. Blank lines are skipped. Throws Error{Parse} with
/// the offending line number on unterminated quotes, stray characters after a
/// closing quote, or a record whose field count differs from the header.
Table read(std::istream& in);

std::string escape(std::string_view field);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_shortest(double v);

/// Fixed-point text with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

/// Strict full-string number parse; returns false on any trailing garbage.
bool parse_double(std::string_view text, double& out);

}  // namespace fatalpoint::csv
