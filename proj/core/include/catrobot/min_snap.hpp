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

#include <vector>

#include <Eigen/Dense>

#include "catrobot/trajectory.hpp"

namespace catrobot {

// Waypoint plan for the cable's lowest point. Yaw and half-span follow fixed
// profiles alongside the polynomial position trajectory.
struct WaypointPlan {
  std::vector<Eigen::Vector3d> waypoints;  // >= 2
  std::vector<double> durations;           // one per segment, all > 0
  double psi = 0.0;
  double s = 0.3;
};

// Segment durations proportional to inter-waypoint distance, normalized to
// the given total time. Coincident consecutive waypoints get an equal share.
std::vector<double> proportional_durations(
    const std::vector<Eigen::Vector3d>& waypoints, double total_time);

// Piecewise 7th-degree polynomial through the waypoints minimizing the
// integral of squared snap, with position-through-snap continuity at the
// interior joints and zero velocity/acceleration/jerk at both ends.
//
// Evaluation outside [0, total_time] holds the nearest endpoint with zero
// derivatives.
class MinSnapTrajectory {
 public:
  // Throws SingularQP when the constraint system is rank-deficient (e.g.
  // a zero segment duration), DomainError for structurally invalid plans.
  static MinSnapTrajectory solve(const WaypointPlan& plan);

  Eigen::Vector3d position(double t) const { return derivative(t, 0); }
  // d-th time derivative of position, d in [0, 7]; higher orders are zero.
  Eigen::Vector3d derivative(double t, int order) const;

  double total_time() const { return total_time_; }
  // Integral of squared snap, summed over axes.
  double snap_cost() const;
  static double snap_cost(const Eigen::MatrixXd& coefficients,
                          const std::vector<double>& durations);

  // Stacked per-segment coefficients, (8*segments) x 3, in normalized
  // segment time; exposed for the optimality checks.
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  const Eigen::MatrixXd& constraint_matrix() const { return constraints_; }
  const std::vector<double>& durations() const { return durations_; }

 private:
  MinSnapTrajectory() = default;

  std::vector<double> durations_;
  std::vector<double> start_times_;
  double total_time_ = 0.0;
  Eigen::MatrixXd coefficients_;
  Eigen::MatrixXd constraints_;
};

// Full setpoint trajectory from a waypoint plan: minimum-snap lowest point,
// constant yaw and half-span.
SetpointTrajectory waypoint_trajectory(const WaypointPlan& plan);

}  // namespace catrobot
