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

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catrobot/errors.hpp"

namespace catrobot {

// One logged sample of a closed-loop run. x_c/psi/span are measured back
// from the simulated endpoints; the _d channels are the commanded values.
struct TraceRow {
  double t = 0.0;
  Eigen::Vector3d x_a = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_b = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_c = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_c_d = Eigen::Vector3d::Zero();
  double psi = 0.0;
  double psi_d = 0.0;
  double span = 0.0;    // measured half-span
  double span_d = 0.0;  // commanded half-span
  double f_a = 0.0;
  double f_b = 0.0;
  double roll_a = 0.0, pitch_a = 0.0, yaw_a = 0.0;
  double roll_b = 0.0, pitch_b = 0.0, yaw_b = 0.0;
  bool taut = false;
};

// Signed per-axis moments of the tracking errors over a time window, plus
// the RMS norms the acceptance bounds use.
struct SummaryStats {
  bool valid = false;
  double window_start = 0.0;
  std::size_t samples = 0;
  Eigen::Vector3d mu_pos = Eigen::Vector3d::Zero();
  Eigen::Vector3d sigma_pos = Eigen::Vector3d::Zero();
  double mu_psi = 0.0, sigma_psi = 0.0;
  double mu_span = 0.0, sigma_span = 0.0;
  double rms_pos = 0.0;   // sqrt(mean |x_c - x_c_d|^2)
  double rms_psi = 0.0;
  double rms_span = 0.0;
};

struct RunTrace {
  std::string scenario;
  double log_hz = 120.0;
  bool diverged = false;
  std::vector<TraceRow> rows;
  SummaryStats summary;
};

// Column order of the CSV contract.
const std::vector<std::string>& trace_columns();

// Row serialization shared by the CSV and JSON writers.
std::array<double, 26> row_values(const TraceRow& row);
TraceRow row_from_values(const std::array<double, 26>& values);

// Error moments over rows with t >= window_start. Throws EmptyWindow when no
// samples fall inside the window.
SummaryStats compute_stats(const RunTrace& trace, double window_start);

// Non-throwing variant used by the run engine: marks the summary invalid
// when the window is empty.
SummaryStats compute_stats_or_empty(const RunTrace& trace, double window_start);

// CSV with the exact documented column list; floats carry 17 significant
// digits so traces re-read bit-identically.
void write_trace_csv(const RunTrace& trace, const std::string& path);
std::string trace_to_csv(const RunTrace& trace);

// JSON mirror of the CSV with a schema version field.
void write_trace_json(const RunTrace& trace, const std::string& path);
std::string trace_to_json(const RunTrace& trace);

// Reads a trace back from CSV or JSON (sniffed from the content).
RunTrace read_trace(const std::string& path);
RunTrace trace_from_csv(const std::string& text);
RunTrace trace_from_json(const std::string& text);

}  // namespace catrobot
