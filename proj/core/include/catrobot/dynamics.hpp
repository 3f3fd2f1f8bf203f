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

#include <utility>

#include <Eigen/Dense>

#include "catrobot/catenary.hpp"

namespace catrobot {

struct QuadrotorParams {
  double mass = 0.132;  // kg
  Eigen::Matrix3d inertia =
      Eigen::Vector3d(1.4e-5, 1.4e-5, 2.2e-5).asDiagonal();  // kg m^2
  double gravity = kDefaultGravity;
  double f_max = 2.59;   // N, total thrust ceiling
  double tau_max = 0.1;  // N m, per-axis torque ceiling

  // Defaults sized for a 132 g platform; the thrust ceiling leaves a
  // thrust-to-weight of two including the cable share.
  static QuadrotorParams defaults(double cable_mass = 0.0);
  void validate() const;
};

// Rigid-body state of one vehicle. R maps body to world; omega is the body
// angular velocity.
struct QuadrotorState {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();
};

// The four actuated inputs of one vehicle: collective thrust along the body
// z-axis and a body torque.
struct ControlCommand {
  double thrust = 0.0;                                  // N
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();     // N m
};

// Two vehicles coupled by a quasi-static hanging cable.
struct CoupledState {
  QuadrotorState quad_a;
  QuadrotorState quad_b;
  CableSpec cable;
  bool taut = false;  // set iff |x_a - x_b| >= cable length
};

struct SimOptions {
  double k_taut = 500.0;           // N/m penalty spring when taut
  double divergence_limit = 1e6;   // blow-up guard on any state component
  double solver_tol = kDefaultSolverTol;
};

// Force the cable exerts on each vehicle, world frame. Slack cables use the
// instantaneous two-point catenary through the endpoints; taut cables a
// penalty spring along the chord with the weight split evenly. Horizontally
// coincident endpoints (separation < 1e-6 m) fall back to a vertical-hang
// model, each end carrying half the cable weight.
std::pair<Eigen::Vector3d, Eigen::Vector3d> cable_forces(
    const CoupledState& state, const SimOptions& opts = {},
    double gravity = kDefaultGravity);

// One fixed-step RK4 integration step of the coupled Newton-Euler dynamics.
// Rotations advance through the exponential map on the rotation group and
// are polar-projected afterwards; thrust and torque are clamped to the
// actuator bounds first. Deterministic.
//
// Throws NumericalDivergence if any position/velocity/rate component leaves
// [-limit, limit].
CoupledState step(const CoupledState& state, const ControlCommand& cmd_a,
                  const ControlCommand& cmd_b, const QuadrotorParams& params,
                  double dt, const SimOptions& opts = {});

// Cable configuration measured back from the simulated endpoint positions.
struct LowestPoint {
  Eigen::Vector3d x_c = Eigen::Vector3d::Zero();
  double psi = 0.0;    // yaw of the catenary plane
  double s_est = 0.0;  // half of the horizontal endpoint separation
  bool clamped = false;  // vertex fell outside the endpoints; lower endpoint
                         // returned instead
};

// Throws TautCable when the taut flag is set and DegenerateGeometry when the
// endpoints are horizontally coincident (no plane yaw exists).
LowestPoint lowest_point_from_state(const CoupledState& state,
                                    double tol = kDefaultSolverTol);

}  // namespace catrobot
