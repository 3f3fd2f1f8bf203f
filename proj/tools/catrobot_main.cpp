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

// Command-line front end: run closed-loop scenarios, list built-ins, plot
// traces and print error statistics.
//
// Exit status: 0 on success, 2 when a run diverges, 1 on usage errors.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catrobot/plot.hpp"
#include "catrobot/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;

void print_summary(const catrobot::SummaryStats& s) {
  if (!s.valid) {
    std::printf("statistics: empty window (no samples at t >= %g s)\n",
                s.window_start);
    return;
  }
  std::printf("statistics over t >= %g s (%zu samples)\n", s.window_start,
              s.samples);
  std::printf("  position error mu  [m]:   % .6e % .6e % .6e\n", s.mu_pos.x(),
              s.mu_pos.y(), s.mu_pos.z());
  std::printf("  position error sigma [m]: % .6e % .6e % .6e\n",
              s.sigma_pos.x(), s.sigma_pos.y(), s.sigma_pos.z());
  std::printf("  yaw error mu/sigma [rad]: % .6e % .6e\n", s.mu_psi,
              s.sigma_psi);
  std::printf("  span error mu/sigma [m]:  % .6e % .6e\n", s.mu_span,
              s.sigma_span);
  std::printf("  rms |x_C err| [m]: %.6e   rms yaw [rad]: %.6e   rms span "
              "[m]: %.6e\n",
              s.rms_pos, s.rms_psi, s.rms_span);
}

std::vector<std::string> split_channels(const std::string& arg) {
  std::vector<std::string> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catrobot: cable robot simulation and control toolkit"};
  app.require_subcommand(1);

  // run ----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "Run a closed-loop scenario");
  std::string scenario_arg;
  run_cmd->add_option("--scenario", scenario_arg,
                      "Built-in scenario name or path to a scenario JSON")
      ->required();
  double dt_override = -1.0, duration_override = -1.0, log_rate_override = -1.0;
  std::string tension_mode_arg, out_path;
  bool no_feedforward = false;
  run_cmd->add_option("--dt", dt_override, "Physics step [s]");
  run_cmd->add_option("--duration", duration_override, "Run duration [s]");
  run_cmd->add_option("--tension-mode", tension_mode_arg,
                      "Tension feed-forward formula: classical|paper");
  run_cmd->add_flag("--no-feedforward", no_feedforward,
                    "Disable the cable tension feed-forward");
  run_cmd->add_option("--out", out_path,
                      "Trace output path (.csv or .json, by extension)");
  run_cmd->add_option("--log-rate", log_rate_override, "Trace rate [Hz]");

  // list ---------------------------------------------------------------
  auto* list_cmd = app.add_subcommand("list", "List built-in scenarios");

  // plot ---------------------------------------------------------------
  auto* plot_cmd = app.add_subcommand("plot", "Render a trace to SVG");
  std::string plot_trace_path, channels_arg = "x_C,span,yaw", svg_path;
  plot_cmd->add_option("trace", plot_trace_path, "Trace file (CSV or JSON)")
      ->required();
  plot_cmd->add_option("--channels", channels_arg,
                       "Comma-separated channel list");
  plot_cmd->add_option("--out", svg_path, "Output SVG path")->required();

  // stats --------------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "Error statistics of a trace");
  std::string stats_trace_path;
  double stats_from = 5.0;
  stats_cmd->add_option("trace", stats_trace_path, "Trace file (CSV or JSON)")
      ->required();
  stats_cmd->add_option("--from", stats_from, "Window start [s]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) {
      catrobot::ScenarioSpec spec = catrobot::load_scenario(scenario_arg);
      if (dt_override > 0.0) spec.sim.dt = dt_override;
      if (duration_override >= 0.0) spec.sim.duration = duration_override;
      if (log_rate_override > 0.0) spec.sim.log_hz = log_rate_override;
      if (!tension_mode_arg.empty()) {
        if (tension_mode_arg == "classical") {
          spec.tension_mode = catrobot::TensionMode::kClassical;
        } else if (tension_mode_arg == "paper") {
          spec.tension_mode = catrobot::TensionMode::kPaper;
        } else {
          std::cerr << "invalid --tension-mode (classical|paper)\n";
          return kExitUsage;
        }
      }
      if (no_feedforward) spec.feedforward = catrobot::FeedforwardMode::kOff;

      const catrobot::RunTrace trace = catrobot::run_scenario(spec);
      if (!out_path.empty()) {
        if (ends_with(out_path, ".json")) {
          catrobot::write_trace_json(trace, out_path);
        } else {
          catrobot::write_trace_csv(trace, out_path);
        }
        std::printf("trace written to %s (%zu rows)\n", out_path.c_str(),
                    trace.rows.size());
      }
      std::printf("scenario %s: %zu rows at %g Hz\n", trace.scenario.c_str(),
                  trace.rows.size(), trace.log_hz);
      print_summary(trace.summary);
      if (trace.diverged) {
        std::cerr << "run diverged: state left the sane range\n";
        return kExitDiverged;
      }
      return kExitOk;
    }

    if (*list_cmd) {
      for (const auto& name : catrobot::builtin_scenario_names()) {
        const catrobot::ScenarioSpec spec = catrobot::builtin_scenario(name);
        std::printf("%-15s cable %.3g m / %.4g kg, %g s\n", name.c_str(),
                    spec.cable.length, spec.cable.mass, spec.sim.duration);
      }
      return kExitOk;
    }

    if (*plot_cmd) {
      const catrobot::RunTrace trace = catrobot::read_trace(plot_trace_path);
      catrobot::write_svg(trace, split_channels(channels_arg), svg_path);
      std::printf("plot written to %s\n", svg_path.c_str());
      return kExitOk;
    }

    if (*stats_cmd) {
      const catrobot::RunTrace trace = catrobot::read_trace(stats_trace_path);
      print_summary(catrobot::compute_stats(trace, stats_from));
      return kExitOk;
    }
  } catch (const catrobot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
