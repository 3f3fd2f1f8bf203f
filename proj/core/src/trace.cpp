// Copyright 2026 The catrobot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catrobot/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace catrobot {
namespace {

constexpr int kTraceSchemaVersion = 1;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace

const std::vector<std::string>& trace_columns() {
  static const std::vector<std::string> kColumns = {
      "t",      "xA_x",   "xA_y",  "xA_z",   "xB_x",   "xB_y",   "xB_z",
      "xC_x",   "xC_y",   "xC_z",  "xCd_x",  "xCd_y",  "xCd_z",  "psi",
      "psi_d",  "span",   "span_d", "fA",    "fB",     "rollA",  "pitchA",
      "yawA",   "rollB",  "pitchB", "yawB",  "tautFlag"};
  return kColumns;
}

std::array<double, 26> row_values(const TraceRow& r) {
  return {r.t,
          r.x_a.x(), r.x_a.y(), r.x_a.z(),
          r.x_b.x(), r.x_b.y(), r.x_b.z(),
          r.x_c.x(), r.x_c.y(), r.x_c.z(),
          r.x_c_d.x(), r.x_c_d.y(), r.x_c_d.z(),
          r.psi, r.psi_d,
          r.span, r.span_d,
          r.f_a, r.f_b,
          r.roll_a, r.pitch_a, r.yaw_a,
          r.roll_b, r.pitch_b, r.yaw_b,
          r.taut ? 1.0 : 0.0};
}

TraceRow row_from_values(const std::array<double, 26>& v) {
  TraceRow r;
  r.t = v[0];
  r.x_a = {v[1], v[2], v[3]};
  r.x_b = {v[4], v[5], v[6]};
  r.x_c = {v[7], v[8], v[9]};
  r.x_c_d = {v[10], v[11], v[12]};
  r.psi = v[13];
  r.psi_d = v[14];
  r.span = v[15];
  r.span_d = v[16];
  r.f_a = v[17];
  r.f_b = v[18];
  r.roll_a = v[19];
  r.pitch_a = v[20];
  r.yaw_a = v[21];
  r.roll_b = v[22];
  r.pitch_b = v[23];
  r.yaw_b = v[24];
  r.taut = v[25] != 0.0;
  return r;
}

SummaryStats compute_stats(const RunTrace& trace, double window_start) {
  SummaryStats s = compute_stats_or_empty(trace, window_start);
  if (!s.valid) {
    throw EmptyWindow("stats: no samples at or after t = " +
                      std::to_string(window_start));
  }
  return s;
}

SummaryStats compute_stats_or_empty(const RunTrace& trace,
                                    double window_start) {
  SummaryStats s;
  s.window_start = window_start;

  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  Eigen::Vector3d sum_sq = Eigen::Vector3d::Zero();
  double psi_sum = 0.0, psi_sq = 0.0;
  double span_sum = 0.0, span_sq = 0.0;
  double norm_sq = 0.0;
  std::size_t n = 0;

  for (const TraceRow& row : trace.rows) {
    if (row.t < window_start) continue;
    const Eigen::Vector3d e = row.x_c - row.x_c_d;
    const double e_psi = row.psi - row.psi_d;
    const double e_span = row.span - row.span_d;
    sum += e;
    sum_sq += e.cwiseProduct(e);
    psi_sum += e_psi;
    psi_sq += e_psi * e_psi;
    span_sum += e_span;
    span_sq += e_span * e_span;
    norm_sq += e.squaredNorm();
    ++n;
  }
  if (n == 0) return s;

  const double inv = 1.0 / static_cast<double>(n);
  s.valid = true;
  s.samples = n;
  s.mu_pos = sum * inv;
  s.sigma_pos =
      (sum_sq * inv - s.mu_pos.cwiseProduct(s.mu_pos)).cwiseMax(0.0).cwiseSqrt();
  s.mu_psi = psi_sum * inv;
  s.sigma_psi = std::sqrt(std::max(0.0, psi_sq * inv - s.mu_psi * s.mu_psi));
  s.mu_span = span_sum * inv;
  s.sigma_span =
      std::sqrt(std::max(0.0, span_sq * inv - s.mu_span * s.mu_span));
  s.rms_pos = std::sqrt(norm_sq * inv);
  s.rms_psi = std::sqrt(psi_sq * inv);
  s.rms_span = std::sqrt(span_sq * inv);
  return s;
}

std::string trace_to_csv(const RunTrace& trace) {
  std::string out;
  const auto& cols = trace_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const TraceRow& row : trace.rows) {
    const auto values = row_values(row);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ',';
      if (i + 1 == values.size()) {
        out += row.taut ? '1' : '0';
      } else {
        out += format_double(values[i]);
      }
    }
    out += '\n';
  }
  return out;
}

void write_trace_csv(const RunTrace& trace, const std::string& path) {
  write_file(path, trace_to_csv(trace));
}

std::string trace_to_json(const RunTrace& trace) {
  nlohmann::json j;
  j["schema_version"] = kTraceSchemaVersion;
  j["scenario"] = trace.scenario;
  j["log_hz"] = trace.log_hz;
  j["diverged"] = trace.diverged;
  j["columns"] = trace_columns();
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& row : trace.rows) {
    const auto values = row_values(row);
    nlohmann::json jr = nlohmann::json::array();
    for (double v : values) jr.push_back(v);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

void write_trace_json(const RunTrace& trace, const std::string& path) {
  write_file(path, trace_to_json(trace));
}

RunTrace trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV trace");

  // Validate the header against the contract.
  {
    std::istringstream header(line);
    std::string name;
    std::size_t i = 0;
    const auto& cols = trace_columns();
    while (std::getline(header, name, ',')) {
      if (!name.empty() && name.back() == '\r') name.pop_back();
      if (i >= cols.size() || name != cols[i]) {
        throw IoError("unexpected CSV column '" + name + "'");
      }
      ++i;
    }
    if (i != cols.size()) throw IoError("CSV trace has missing columns");
  }

  RunTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 26> values{};
    std::istringstream ls(line);
    std::string field;
    std::size_t i = 0;
    while (std::getline(ls, field, ',')) {
      if (i >= values.size()) throw IoError("CSV row has too many fields");
      values[i++] = std::strtod(field.c_str(), nullptr);
    }
    if (i != values.size()) throw IoError("CSV row has missing fields");
    trace.rows.push_back(row_from_values(values));
  }
  return trace;
}

RunTrace trace_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON trace: ") + e.what());
  }
  RunTrace trace;
  try {
    trace.scenario = j.value("scenario", std::string());
    trace.log_hz = j.value("log_hz", 120.0);
    trace.diverged = j.value("diverged", false);
    for (const auto& jr : j.at("rows")) {
      std::array<double, 26> values{};
      if (jr.size() != values.size()) {
        throw IoError("JSON trace row has wrong arity");
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = jr[i].get<double>();
      }
      trace.rows.push_back(row_from_values(values));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON trace: ") + e.what());
  }
  return trace;
}

RunTrace read_trace(const std::string& path) {
  const std::string text = read_file(path);
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    return (c == '{') ? trace_from_json(text) : trace_from_csv(text);
  }
  throw IoError("empty trace file " + path);
}

}  // namespace catrobot
