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

#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "catrobot/catenary.hpp"

namespace catrobot {

// Desired configuration of the cable robot: lowest-point position, yaw of
// the catenary plane, and half-span, each with first and second time
// derivatives. Yaw is kept unwrapped (continuous) over a trajectory.
struct CatenarySetpoint {
  Eigen::Vector3d x_c = Eigen::Vector3d::Zero();       // m
  Eigen::Vector3d x_c_dot = Eigen::Vector3d::Zero();   // m/s
  Eigen::Vector3d x_c_ddot = Eigen::Vector3d::Zero();  // m/s^2
  double psi = 0.0;       // rad
  double psi_dot = 0.0;   // rad/s
  double psi_ddot = 0.0;  // rad/s^2
  double s = 0.5;         // m, half-span
  double s_dot = 0.0;     // m/s
  double s_ddot = 0.0;    // m/s^2
};

// Desired state for one vehicle in the world frame. Vehicle yaw equals the
// catenary yaw so the cable carries no torsion.
struct QuadrotorReference {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_dot = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_ddot = Eigen::Vector3d::Zero();
  double psi = 0.0;
};

// A setpoint trajectory is a pure function of time.
using SetpointTrajectory = std::function<CatenarySetpoint(double)>;

// Converts one cable-space setpoint into world-frame references for the two
// vehicles. Endpoint A is placed at arc parameter -s, B at +s; velocity and
// acceleration include the frame-rotation terms, with the 2*R_dot*v cross
// term in the acceleration.
std::pair<QuadrotorReference, QuadrotorReference> setpoint_to_references(
    const CatenarySetpoint& sp, const CableSpec& cable,
    double tol = kDefaultSolverTol);

// Same conversion with a precomputed curve solution (the simulation engine
// solves once per control tick and shares it with the tension feed-forward).
std::pair<QuadrotorReference, QuadrotorReference> setpoint_to_references(
    const CatenarySetpoint& sp, const CatenarySolution& sol);

// ---- Built-in trajectory families -----------------------------------------

// Fixed setpoint (hover).
SetpointTrajectory constant_trajectory(const Eigen::Vector3d& x_c, double psi,
                                       double s);

// Fixed lowest point with ramping yaw and an oscillating span:
//   psi(t) = psi_rate * t,  s(t) = s_mean + s_amp * cos(s_freq * t).
SetpointTrajectory flower_trajectory(const Eigen::Vector3d& x_c,
                                     double psi_rate, double s_mean,
                                     double s_amp, double s_freq = 1.0);

// Constant-velocity translation with a one-burst span excursion:
//   x_c(t) = x_c0 + velocity * t,  psi = 0,
//   s(t) = s_base outside [t_on, t_off), s_base + s_amp * sin(t) inside.
// The span rate is fed literally, so it jumps at the window edges; the
// closed-loop controller absorbs the jump.
SetpointTrajectory traverse_trajectory(const Eigen::Vector3d& x_c0,
                                       const Eigen::Vector3d& velocity,
                                       double s_base, double s_amp,
                                       double t_on, double t_off);

}  // namespace catrobot
