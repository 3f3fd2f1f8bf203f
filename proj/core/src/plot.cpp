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

#include "catrobot/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

namespace catrobot {
namespace {

struct Series {
  int column;         // index into row_values
  const char* label;
  const char* color;
  bool dashed;
};

struct Channel {
  const char* unit;
  std::vector<Series> series;
};

const std::map<std::string, Channel>& channel_table() {
  static const std::map<std::string, Channel> kTable = {
      {"x_C",
       {"m",
        {{7, "xC_x", "#1f77b4", false},
         {8, "xC_y", "#2ca02c", false},
         {9, "xC_z", "#9467bd", false},
         {10, "xCd_x", "#d62728", true},
         {11, "xCd_y", "#d62728", true},
         {12, "xCd_z", "#d62728", true}}}},
      {"x_A",
       {"m",
        {{1, "xA_x", "#1f77b4", false},
         {2, "xA_y", "#2ca02c", false},
         {3, "xA_z", "#9467bd", false}}}},
      {"x_B",
       {"m",
        {{4, "xB_x", "#1f77b4", false},
         {5, "xB_y", "#2ca02c", false},
         {6, "xB_z", "#9467bd", false}}}},
      {"span",
       {"m",
        {{15, "span", "#1f77b4", false}, {16, "span_d", "#d62728", true}}}},
      {"yaw",
       {"rad",
        {{13, "psi", "#1f77b4", false}, {14, "psi_d", "#d62728", true}}}},
      {"thrust",
       {"N",
        {{17, "fA", "#1f77b4", false}, {18, "fB", "#ff7f0e", false}}}},
      {"roll",
       {"rad",
        {{19, "rollA", "#1f77b4", false}, {22, "rollB", "#ff7f0e", false}}}},
      {"pitch",
       {"rad",
        {{20, "pitchA", "#1f77b4", false}, {23, "pitchB", "#ff7f0e", false}}}},
      {"taut", {"flag", {{25, "tautFlag", "#d62728", false}}}},
  };
  return kTable;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<std::string> plot_channels() {
  std::vector<std::string> names;
  for (const auto& [name, _] : channel_table()) names.push_back(name);
  return names;
}

std::string render_svg(const RunTrace& trace,
                       const std::vector<std::string>& channels) {
  const auto& table = channel_table();
  for (const auto& name : channels) {
    if (table.find(name) == table.end()) {
      std::string valid;
      for (const auto& n : plot_channels()) {
        if (!valid.empty()) valid += ", ";
        valid += n;
      }
      throw ChannelError("unknown channel '" + name + "'; valid channels: " +
                         valid);
    }
  }
  if (channels.empty()) throw ChannelError("no channels selected");
  if (trace.rows.empty()) throw ChannelError("trace has no rows to plot");

  constexpr int kWidth = 960;
  constexpr int kPanelH = 200;
  constexpr int kGap = 48;
  constexpr int kLeft = 72, kRight = 24, kTop = 36;
  const int total_h =
      kTop + static_cast<int>(channels.size()) * (kPanelH + kGap);

  std::vector<std::array<double, 26>> values;
  values.reserve(trace.rows.size());
  for (const auto& row : trace.rows) values.push_back(row_values(row));

  const double t0 = values.front()[0];
  const double t1 = values.back()[0];
  const double t_span = (t1 > t0) ? (t1 - t0) : 1.0;
  const double plot_w = kWidth - kLeft - kRight;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(total_h) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(kLeft) + "\" y=\"20\" font-size=\"14\">" +
         (trace.scenario.empty() ? std::string("trace") : trace.scenario) +
         "</text>\n";

  int panel_top = kTop;
  for (const auto& name : channels) {
    const Channel& ch = table.at(name);

    double lo = INFINITY, hi = -INFINITY;
    for (const Series& s : ch.series) {
      for (const auto& v : values) {
        lo = std::min(lo, v[s.column]);
        hi = std::max(hi, v[s.column]);
      }
    }
    if (!(hi > lo)) {
      const double pad = (std::abs(lo) > 1e-12) ? 0.1 * std::abs(lo) : 0.5;
      lo -= pad;
      hi += pad;
    } else {
      const double pad = 0.05 * (hi - lo);
      lo -= pad;
      hi += pad;
    }

    const double y0 = panel_top + kPanelH;
    const auto x_of = [&](double t) {
      return kLeft + plot_w * (t - t0) / t_span;
    };
    const auto y_of = [&](double v) {
      return y0 - kPanelH * (v - lo) / (hi - lo);
    };

    // Frame and labels.
    svg += "<rect x=\"" + std::to_string(kLeft) + "\" y=\"" +
           std::to_string(panel_top) + "\" width=\"" + fmt(plot_w) +
           "\" height=\"" + std::to_string(kPanelH) +
           "\" fill=\"none\" stroke=\"#999\"/>\n";
    svg += "<text x=\"8\" y=\"" + fmt(panel_top + 14) + "\">" + name + " [" +
           ch.unit + "]</text>\n";
    svg += "<text x=\"8\" y=\"" + fmt(panel_top + 10 + kPanelH / 2) +
           "\" fill=\"#555\">" + fmt(0.5 * (lo + hi)) + "</text>\n";
    svg += "<text x=\"8\" y=\"" + fmt(panel_top + 26) + "\" fill=\"#555\">" +
           fmt(hi) + "</text>\n";
    svg += "<text x=\"8\" y=\"" + fmt(y0 - 4) + "\" fill=\"#555\">" + fmt(lo) +
           "</text>\n";
    for (int k = 0; k <= 4; ++k) {
      const double t = t0 + t_span * k / 4.0;
      svg += "<text x=\"" + fmt(x_of(t) - 8) + "\" y=\"" + fmt(y0 + 16) +
             "\" fill=\"#555\">" + fmt(t) + "</text>\n";
    }
    svg += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" +
           fmt(y0 + 32) + "\" fill=\"#555\">t [s]</text>\n";

    // Series polylines and legend.
    double legend_x = kLeft + 8;
    for (const Series& s : ch.series) {
      svg += "<polyline fill=\"none\" stroke=\"";
      svg += s.color;
      svg += "\"";
      if (s.dashed) svg += " stroke-dasharray=\"6,4\"";
      svg += " stroke-width=\"1.2\" points=\"";
      for (const auto& v : values) {
        svg += fmt(x_of(v[0]));
        svg += ',';
        svg += fmt(y_of(v[s.column]));
        svg += ' ';
      }
      svg += "\"/>\n";
      svg += "<text x=\"" + fmt(legend_x) + "\" y=\"" +
             fmt(panel_top - 6) + "\" fill=\"" + s.color + "\">" + s.label +
             (s.dashed ? " (desired)" : "") + "</text>\n";
      legend_x += 110;
    }
    panel_top += kPanelH + kGap;
  }
  svg += "</svg>\n";
  return svg;
}

void write_svg(const RunTrace& trace, const std::vector<std::string>& channels,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << render_svg(trace, channels);
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace catrobot
