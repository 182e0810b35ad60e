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

#include "fatalpoint/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "fatalpoint/error.hpp"

namespace fatalpoint::csv {

namespace {

std::string trim_bom(std::string s) {
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
      static_cast<unsigned char>(s[1]) == 0xBB &&
      static_cast<unsigned char>(s[2]) == 0xBF) {
    s.erase(0, 3);
  }
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Splits the whole buffer into records. A record ends at an unquoted LF
// (an optional preceding CR is dropped).
std::vector<Row> split_records(const std::string& text) {
  std::vector<Row> out;
  Row cur;
  std::string field;
  std::size_t line = 1;
  cur.line = 1;
  bool in_quotes = false;
  bool after_quote = false;  // just closed a quoted field
  bool field_started = false;
  bool record_has_content = false;

  auto end_field = [&] {
    cur.fields.push_back(std::move(field));
    field.clear();
    after_quote = false;
    field_started = false;
  };
  auto end_record = [&] {
    if (record_has_content) {
      end_field();
      out.push_back(std::move(cur));
    }
    cur = Row{};
    field.clear();
    after_quote = false;
    field_started = false;
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    if (ch == '\n') {
      end_record();
      ++line;
      cur.line = line;
      continue;
    }
    if (!record_has_content) {
      record_has_content = true;
      cur.line = line;
    }
    if (ch == ',') {
      end_field();
      continue;
    }
    if (after_quote) fail(line, "unexpected character after closing quote");
    if (ch == '"') {
      if (field_started) fail(line, "quote inside unquoted field");
      in_quotes = true;
      field_started = true;
      continue;
    }
    field_started = true;
    field.push_back(ch);
  }
  if (in_quotes) fail(cur.line, "unterminated quoted field");
  end_record();
  return out;
}

}  // namespace

Table read(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::Io, "failed reading CSV stream");
  auto records = split_records(trim_bom(std::move(text)));
  if (records.empty()) throw Error(ErrorKind::Parse, "line 1: missing header");

  Table t;
  t.header = std::move(records.front().fields);
  for (auto& h : t.header) {
    while (!h.empty() && (h.back() == ' ' || h.back() == '\t')) h.pop_back();
    while (!h.empty() && (h.front() == ' ' || h.front() == '\t')) h.erase(0, 1);
  }
  t.rows.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].fields.size() != t.header.size()) {
      fail(records[i].line, "expected " + std::to_string(t.header.size()) +
                                " fields, found " +
                                std::to_string(records[i].fields.size()));
    }
    t.rows.push_back(std::move(records[i]));
  }
  return t;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string format_shortest(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed,
                           decimals);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);  // no "-0.0000"
  }
  return s;
}

bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    return false;
  }
  out = v;
  return true;
}

}  // namespace fatalpoint::csv
