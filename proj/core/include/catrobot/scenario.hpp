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

#include <string>
#include <variant>
#include <vector>

#include "catrobot/control.hpp"
#include "catrobot/dynamics.hpp"
#include "catrobot/min_snap.hpp"
#include "catrobot/trace.hpp"
#include "catrobot/trajectory.hpp"

namespace catrobot {

enum class FeedforwardMode { kOff, kCommanded, kMeasured };

// Declarative trajectory descriptions, serializable to scenario JSON.
struct ConstantTrajConfig {
  Eigen::Vector3d x_c{0.0, 0.0, 0.4};
  double psi = 0.0;
  double s = 0.35;
};
struct FlowerTrajConfig {
  Eigen::Vector3d x_c{0.0, 0.0, 0.4};
  double psi_rate = 0.1;
  double s_mean = 0.35;
  double s_amp = 0.15;
  double s_freq = 1.0;
};
struct TraverseTrajConfig {
  Eigen::Vector3d x_c0{0.0, 0.0, 0.3};
  Eigen::Vector3d velocity{1.0, 0.0, 0.0};
  double s_base = 0.3;
  double s_amp = 0.6;
  double t_on = 4.0 * M_PI;
  double t_off = 5.0 * M_PI;
};
struct WaypointTrajConfig {
  std::vector<Eigen::Vector3d> waypoints;
  std::vector<double> durations;  // empty: proportional over total_time
  double total_time = 20.0;
  double psi = 0.0;
  double s = 0.3;
};
using TrajectoryConfig = std::variant<ConstantTrajConfig, FlowerTrajConfig,
                                      TraverseTrajConfig, WaypointTrajConfig>;

SetpointTrajectory build_trajectory(const TrajectoryConfig& config);

struct SimSettings {
  double dt = 1e-3;           // s, physics step
  double control_hz = 500.0;  // controller rate, zero-order hold
  double duration = 30.0;     // s
  double log_hz = 120.0;      // trace sampling rate
  double stats_window_start = 5.0;  // post-transient statistics window
  // 0 = ideal sensing (controller reads the true state every tick);
  // positive = sample-and-hold state measurements at this rate, e.g. 120 Hz
  // to mimic a motion-capture feed.
  double sensing_hz = 0.0;
};

// Everything one closed-loop experiment needs; seed-free by construction.
struct ScenarioSpec {
  std::string name = "custom";
  CableSpec cable{2.0, 0.0076};
  QuadrotorParams vehicle = QuadrotorParams::defaults(0.0076);
  Gains gains = Gains::defaults_for_mass(0.132);
  TrajectoryConfig trajectory = FlowerTrajConfig{};
  SimSettings sim;
  TensionMode tension_mode = TensionMode::kClassical;
  FeedforwardMode feedforward = FeedforwardMode::kCommanded;
  bool paper_gravity_sign = false;
  double k_taut = 500.0;
  // Vehicles start at rest at the t=0 references; a nonzero offset shifts
  // the initial placement to reproduce an approach transient.
  Eigen::Vector3d start_offset = Eigen::Vector3d::Zero();

  void validate() const;
};

// JSON round-trip (lossless for every field above).
std::string scenario_to_json(const ScenarioSpec& spec);
ScenarioSpec scenario_from_json(const std::string& text);
ScenarioSpec load_scenario(const std::string& name_or_path);

// Built-in experiment presets.
std::vector<std::string> builtin_scenario_names();
ScenarioSpec builtin_scenario(const std::string& name);  // UnknownScenario

// Trajectory of a built-in scenario by name (UnknownScenario otherwise).
SetpointTrajectory scenario_trajectory(const std::string& name);

// Runs the closed loop: sense -> trajectory -> force law -> attitude/thrust
// -> integrate, logging at the trace rate and computing post-transient
// statistics. On numerical divergence the partial trace is returned with the
// diverged flag set instead of throwing.
RunTrace run_scenario(const ScenarioSpec& spec);

}  // namespace catrobot
