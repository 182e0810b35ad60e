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

#include "fatalpoint/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "fatalpoint/csv.hpp"
#include "fatalpoint/error.hpp"

namespace fatalpoint::report {

namespace {

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json point_json(Point2D p) { return json::array({p.x, p.y}); }

const char* seeding_name(Seeding s) {
  return s == Seeding::UniformRandom ? "uniform_random" : "kmeanspp_style";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string optional_csv(const std::optional<double>& v) {
  return v ? csv::format_shortest(*v) : "NA";
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorKind::Parse, "missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

double number_at(const csv::Row& row, std::size_t col) {
  double v = 0.0;
  if (!csv::parse_double(row.fields[col], v)) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(row.line) +
                                      ": not a number: '" + row.fields[col] + "'");
  }
  return v;
}

std::optional<double> optional_at(const csv::Row& row, std::size_t col) {
  if (row.fields[col] == "NA") return std::nullopt;
  return number_at(row, col);
}

// Plot frame shared by both chart kinds.
struct Frame {
  double width = 900, height = 600;
  double left = 70, right = 20, top = 40, bottom = 50;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;

  double px(double x) const {
    return left + (x - x0) / (x1 - x0) * (width - left - right);
  }
  double py(double y) const {
    return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom);
  }
};

void expand_degenerate(double& lo, double& hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
}

void write_axes(std::ostream& out, const Frame& f, const std::string& title,
                const std::string& x_label, const std::string& y_label) {
  out << "<rect class=\"frame\" x=\"" << num(f.left) << "\" y=\"" << num(f.top)
      << "\" width=\"" << num(f.width - f.left - f.right) << "\" height=\""
      << num(f.height - f.top - f.bottom) << "\"/>\n";
  out << "<text class=\"title\" x=\"" << num(f.width / 2) << "\" y=\"24\">"
      << xml_escape(title) << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
    out << "<text class=\"tick\" x=\"" << num(f.px(xv)) << "\" y=\""
        << num(f.height - f.bottom + 16) << "\">" << num(xv) << "</text>\n";
    out << "<text class=\"tick ylab\" x=\"" << num(f.left - 6) << "\" y=\""
        << num(f.py(yv) + 4) << "\">" << num(yv) << "</text>\n";
  }
  out << "<text class=\"axis\" x=\"" << num(f.width / 2) << "\" y=\""
      << num(f.height - 10) << "\">" << xml_escape(x_label) << "</text>\n";
  out << "<text class=\"axis\" transform=\"translate(16," << num(f.height / 2)
      << ") rotate(-90)\">" << xml_escape(y_label) << "</text>\n";
}

}  // namespace

json to_json(const CleansingReport& report) {
  json rows = json::array();
  for (const auto& r : report.rejected_rows) {
    rows.push_back({{"row_index", r.row_index},
                    {"reason", to_string(r.reason)},
                    {"field", r.field},
                    {"value", r.value}});
  }
  return {{"total_rows", report.total_rows},
          {"accepted", report.accepted},
          {"rejected", report.rejected},
          {"rejected_rows", rows}};
}

json to_json(const FatalPoint& fp) {
  json members = json::array();
  for (const auto& m : fp.members) members.push_back(point_json(m));
  return {{"c", fp.cluster_id},
          {"bin_longitude_hundredths", fp.bin.hundredths},
          {"f_sc", fp.frequency},
          {"representative", point_json(fp.representative)},
          {"members", members}};
}

json to_json(const ClusterDomain& domain, std::span<const CrashRecord> records,
             std::span<const FatalPoint> fatal_points) {
  json clusters = json::array();
  for (const auto& c : domain.clusters) {
    json ids = json::array();
    for (auto i : c.members) ids.push_back(records[i].record_id);
    clusters.push_back({{"c", c.id},
                        {"centroid", point_json(c.centroid)},
                        {"f_c", c.frequency()},
                        {"member_record_ids", ids}});
  }
  json fps = json::array();
  for (const auto& fp : fatal_points) fps.push_back(to_json(fp));
  return {{"k", domain.k},
          {"seed", domain.params.rng_seed},
          {"iterations", domain.iterations_used},
          {"wcss", domain.wcss},
          {"clusters", clusters},
          {"fatal_points", fps}};
}

json to_json(const SweepResult& sweep) {
  const auto& p = sweep.params;
  json params = {{"k_min", p.k_min},
                 {"k_max", p.k_max},
                 {"step", p.step},
                 {"seed", p.clustering.rng_seed},
                 {"restarts", p.clustering.restarts},
                 {"max_iterations", p.clustering.max_iterations},
                 {"convergence_tol", p.clustering.convergence_tol},
                 {"seeding", seeding_name(p.clustering.seeding)}};
  json domains = json::array();
  for (const auto& d : sweep.domains) {
    domains.push_back({{"k", d.k},
                       {"corr_fc_fsc", optional_number(d.corr_fc_fsc)},
                       {"corr_nfc_nuc", optional_number(d.corr_nfc_nuc)},
                       {"mean_nfc", d.mean_nfc},
                       {"mean_nuc", d.mean_nuc},
                       {"var_nfc", d.var_nfc},
                       {"var_nuc", d.var_nuc},
                       {"iterations", d.iterations},
                       {"wcss", d.wcss}});
  }
  return {{"params", params},
          {"domains", domains},
          {"corr_of_corrs", optional_number(sweep.corr_of_corrs)}};
}

json to_json(const GroupSummary& groups) {
  json arr = json::array();
  for (const auto& g : groups.groups) {
    arr.push_back({{"k_lo", g.bounds.k_lo},
                   {"k_hi", g.bounds.k_hi},
                   {"domains", g.domains},
                   {"mean_of_mean_nfc", optional_number(g.mean_of_mean_nfc)},
                   {"var_of_mean_nfc", optional_number(g.var_of_mean_nfc)},
                   {"mean_of_mean_nuc", optional_number(g.mean_of_mean_nuc)},
                   {"var_of_mean_nuc", optional_number(g.var_of_mean_nuc)}});
  }
  return {{"groups", arr}};
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "k,corr_fc_fsc,corr_nfc_nuc,mean_nfc,mean_nuc,var_nfc,var_nuc\n";
  for (const auto& d : sweep.domains) {
    out << d.k << ',' << optional_csv(d.corr_fc_fsc) << ','
        << optional_csv(d.corr_nfc_nuc) << ',' << csv::format_shortest(d.mean_nfc)
        << ',' << csv::format_shortest(d.mean_nuc) << ','
        << csv::format_shortest(d.var_nfc) << ',' << csv::format_shortest(d.var_nuc)
        << '\n';
  }
}

std::vector<DomainStats> read_sweep_csv(std::istream& in) {
  const auto table = csv::read(in);
  const auto& h = table.header;
  const auto ck = column_index(h, "k"), c1 = column_index(h, "corr_fc_fsc"),
             c2 = column_index(h, "corr_nfc_nuc"), c3 = column_index(h, "mean_nfc"),
             c4 = column_index(h, "mean_nuc"), c5 = column_index(h, "var_nfc"),
             c6 = column_index(h, "var_nuc");
  std::vector<DomainStats> out;
  for (const auto& row : table.rows) {
    DomainStats d;
    d.k = static_cast<std::size_t>(number_at(row, ck));
    d.corr_fc_fsc = optional_at(row, c1);
    d.corr_nfc_nuc = optional_at(row, c2);
    d.mean_nfc = number_at(row, c3);
    d.mean_nuc = number_at(row, c4);
    d.var_nfc = number_at(row, c5);
    d.var_nuc = number_at(row, c6);
    out.push_back(d);
  }
  return out;
}

DomainTable read_domain_table_csv(std::istream& in) {
  const auto table = csv::read(in);
  const auto& h = table.header;
  const auto cc = column_index(h, "c"), cfc = column_index(h, "f_c"),
             cnfc = column_index(h, "N_fc"), cfsc = column_index(h, "f_sc"),
             cg = column_index(h, "g"), ct = column_index(h, "t"),
             cuc = column_index(h, "u_c"), cnuc = column_index(h, "N_uc");
  DomainTable out;
  for (const auto& row : table.rows) {
    SafetyRow r;
    r.cluster_id = static_cast<std::size_t>(number_at(row, cc));
    r.crash_frequency = static_cast<std::size_t>(number_at(row, cfc));
    r.normalized_frequency = number_at(row, cnfc);
    r.fatal_frequency = static_cast<std::size_t>(number_at(row, cfsc));
    r.representative = {number_at(row, cg), number_at(row, ct)};
    r.safety_ratio = number_at(row, cuc);
    r.normalized_ratio = number_at(row, cnuc);
    out.rows.push_back(r);
  }
  out.k = out.rows.size();
  return out;
}

std::string cluster_color(std::size_t cluster_id) {
  const double hue = std::fmod(static_cast<double>(cluster_id) * 137.508, 360.0);
  const double lightness = 38.0 + static_cast<double>(cluster_id % 3) * 12.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,%.0f%%)", hue, lightness);
  return buf;
}

void write_cluster_svg(std::ostream& out, const ClusterDomain& domain,
                       std::span<const CrashRecord> records,
                       std::span<const FatalPoint> fatal_points) {
  Frame f;
  f.x0 = f.y0 = std::numeric_limits<double>::infinity();
  f.x1 = f.y1 = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    f.x0 = std::min(f.x0, r.longitude);
    f.x1 = std::max(f.x1, r.longitude);
    f.y0 = std::min(f.y0, r.latitude);
    f.y1 = std::max(f.y1, r.latitude);
  }
  if (records.empty()) f.x0 = f.y0 = 0, f.x1 = f.y1 = 1;
  expand_degenerate(f.x0, f.x1);
  expand_degenerate(f.y0, f.y1);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width)
      << "\" height=\"" << num(f.height) << "\" viewBox=\"0 0 " << num(f.width)
      << ' ' << num(f.height) << "\">\n<style>\n"
      << ".frame{fill:none;stroke:#444}.title{font:16px sans-serif;text-anchor:middle}"
      << ".tick{font:11px sans-serif;text-anchor:middle}.ylab{text-anchor:end}"
      << ".axis{font:12px sans-serif;text-anchor:middle}"
      << ".centroid{stroke:#d00;stroke-width:2}"
      << ".fatal{fill:#000;fill-opacity:0.25;stroke:#000;stroke-width:0.5}\n";
  for (const auto& c : domain.clusters) {
    out << ".c" << c.id << "{fill:" << cluster_color(c.id) << "}\n";
  }
  out << "</style>\n";
  write_axes(out, f, "k-means clusters, k = " + std::to_string(domain.k),
             "longitude", "latitude");

  for (const auto& c : domain.clusters) {
    out << "<g class=\"c" << c.id << "\">\n";
    for (auto i : c.members) {
      out << "<circle cx=\"" << num(f.px(records[i].longitude)) << "\" cy=\""
          << num(f.py(records[i].latitude)) << "\" r=\"2.5\"/>\n";
    }
    out << "</g>\n";
  }
  for (const auto& fp : fatal_points) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& m : fp.members) {
      lo = std::min(lo, m.y);
      hi = std::max(hi, m.y);
    }
    const double x_left = f.px(fp.bin.degrees() - 0.005);
    const double x_right = f.px(fp.bin.degrees() + 0.005);
    out << "<rect class=\"fatal\" x=\"" << num(x_left) << "\" y=\""
        << num(f.py(hi) - 3) << "\" width=\"" << num(std::max(x_right - x_left, 1.0))
        << "\" height=\"" << num(f.py(lo) - f.py(hi) + 6) << "\"/>\n";
  }
  for (const auto& c : domain.clusters) {
    const double cx = f.px(c.centroid.x), cy = f.py(c.centroid.y);
    out << "<path class=\"centroid\" d=\"M" << num(cx - 5) << ' ' << num(cy - 5)
        << "L" << num(cx + 5) << ' ' << num(cy + 5) << "M" << num(cx - 5) << ' '
        << num(cy + 5) << "L" << num(cx + 5) << ' ' << num(cy - 5) << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_line_chart_svg(std::ostream& out, const std::string& title,
                          const std::string& y_label, std::span<const double> x,
                          std::span<const Series> series) {
  Frame f;
  f.x0 = f.y0 = std::numeric_limits<double>::infinity();
  f.x1 = f.y1 = -std::numeric_limits<double>::infinity();
  for (double v : x) {
    f.x0 = std::min(f.x0, v);
    f.x1 = std::max(f.x1, v);
  }
  for (const auto& s : series) {
    for (const auto& v : s.values) {
      if (!v) continue;
      f.y0 = std::min(f.y0, *v);
      f.y1 = std::max(f.y1, *v);
    }
  }
  if (!std::isfinite(f.x0)) f.x0 = 0, f.x1 = 1;
  if (!std::isfinite(f.y0)) f.y0 = 0, f.y1 = 1;
  expand_degenerate(f.x0, f.x1);
  expand_degenerate(f.y0, f.y1);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width)
      << "\" height=\"" << num(f.height) << "\" viewBox=\"0 0 " << num(f.width)
      << ' ' << num(f.height) << "\">\n<style>\n"
      << ".frame{fill:none;stroke:#444}.title{font:16px sans-serif;text-anchor:middle}"
      << ".tick{font:11px sans-serif;text-anchor:middle}.ylab{text-anchor:end}"
      << ".axis{font:12px sans-serif;text-anchor:middle}"
      << ".legend{font:12px sans-serif}polyline{fill:none;stroke-width:1.5}\n"
      << "</style>\n";
  write_axes(out, f, title, "k", y_label);

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    std::string pts;
    auto flush = [&] {
      if (!pts.empty()) {
        out << "<polyline stroke=\"" << xml_escape(ser.color) << "\" points=\""
            << pts << "\"/>\n";
        pts.clear();
      }
    };
    for (std::size_t i = 0; i < x.size() && i < ser.values.size(); ++i) {
      if (!ser.values[i]) {
        flush();
        continue;
      }
      if (!pts.empty()) pts.push_back(' ');
      pts += num(f.px(x[i])) + "," + num(f.py(*ser.values[i]));
    }
    flush();
    const double ly = f.top + 16 + 16.0 * static_cast<double>(s);
    out << "<line x1=\"" << num(f.left + 10) << "\" y1=\"" << num(ly - 4)
        << "\" x2=\"" << num(f.left + 30) << "\" y2=\"" << num(ly - 4)
        << "\" stroke=\"" << xml_escape(ser.color) << "\"/>\n";
    out << "<text class=\"legend\" x=\"" << num(f.left + 36) << "\" y=\""
        << num(ly) << "\">" << xml_escape(ser.name) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_sweep_svg(std::ostream& out, const SweepResult& sweep, SweepChart chart) {
  std::vector<double> ks;
  Series blue{"", "#1f4fd1", {}}, red{"", "#d1261f", {}};
  for (const auto& d : sweep.domains) {
    ks.push_back(static_cast<double>(d.k));
    switch (chart) {
      case SweepChart::Correlation:
        blue.values.push_back(d.corr_fc_fsc);
        red.values.push_back(d.corr_nfc_nuc);
        break;
      case SweepChart::Mean:
        blue.values.push_back(d.mean_nfc);
        red.values.push_back(d.mean_nuc);
        break;
      case SweepChart::Variance:
        blue.values.push_back(d.var_nfc);
        red.values.push_back(d.var_nuc);
        break;
    }
  }
  std::string title, y_label;
  switch (chart) {
    case SweepChart::Correlation:
      title = "Correlation per domain";
      y_label = "Pearson r";
      blue.name = "corr(f_c, f_sc)";
      red.name = "corr(N(f_c), N(u_c))";
      break;
    case SweepChart::Mean:
      title = "Mean normalized measure per domain";
      y_label = "mean";
      blue.name = "mean N(f_c)";
      red.name = "mean N(u_c)";
      break;
    case SweepChart::Variance:
      title = "Variance of normalized measure per domain";
      y_label = "variance";
      blue.name = "var N(f_c)";
      red.name = "var N(u_c)";
      break;
  }
  const Series series[] = {blue, red};
  write_line_chart_svg(out, title, y_label, ks, series);
}

}  // namespace fatalpoint::report
