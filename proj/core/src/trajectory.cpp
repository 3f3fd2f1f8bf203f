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

#include "catrobot/trajectory.hpp"

#include <cmath>

#include "catrobot/math_utils.hpp"

namespace catrobot {
namespace {

QuadrotorReference make_reference(const CatenarySetpoint& sp,
                                  const RotzDerivatives& rc,
                                  const EndpointKinematics& ek) {
  QuadrotorReference ref;
  ref.x = sp.x_c + rc.R * ek.position;
  ref.x_dot = sp.x_c_dot + rc.R_dot * ek.position + rc.R * ek.velocity;
  ref.x_ddot = sp.x_c_ddot + rc.R_ddot * ek.position + rc.R * ek.acceleration +
               2.0 * rc.R_dot * ek.velocity;
  ref.psi = sp.psi;
  return ref;
}

}  // namespace

std::pair<QuadrotorReference, QuadrotorReference> setpoint_to_references(
    const CatenarySetpoint& sp, const CableSpec& cable, double tol) {
  const CatenarySolution sol =
      solve_catenary(cable, sp.s, sp.s_dot, sp.s_ddot, tol);
  return setpoint_to_references(sp, sol);
}

std::pair<QuadrotorReference, QuadrotorReference> setpoint_to_references(
    const CatenarySetpoint& sp, const CatenarySolution& sol) {
  const RotzDerivatives rc = rotz_derivatives(sp.psi, sp.psi_dot, sp.psi_ddot);
  return {make_reference(sp, rc, endpoint_kinematics(sol, Endpoint::kA)),
          make_reference(sp, rc, endpoint_kinematics(sol, Endpoint::kB))};
}

SetpointTrajectory constant_trajectory(const Eigen::Vector3d& x_c, double psi,
                                       double s) {
  return [x_c, psi, s](double) {
    CatenarySetpoint sp;
    sp.x_c = x_c;
    sp.psi = psi;
    sp.s = s;
    return sp;
  };
}

SetpointTrajectory flower_trajectory(const Eigen::Vector3d& x_c,
                                     double psi_rate, double s_mean,
                                     double s_amp, double s_freq) {
  return [x_c, psi_rate, s_mean, s_amp, s_freq](double t) {
    CatenarySetpoint sp;
    sp.x_c = x_c;
    sp.psi = psi_rate * t;
    sp.psi_dot = psi_rate;
    sp.s = s_mean + s_amp * std::cos(s_freq * t);
    sp.s_dot = -s_amp * s_freq * std::sin(s_freq * t);
    sp.s_ddot = -s_amp * s_freq * s_freq * std::cos(s_freq * t);
    return sp;
  };
}

SetpointTrajectory traverse_trajectory(const Eigen::Vector3d& x_c0,
                                       const Eigen::Vector3d& velocity,
                                       double s_base, double s_amp,
                                       double t_on, double t_off) {
  return [x_c0, velocity, s_base, s_amp, t_on, t_off](double t) {
    CatenarySetpoint sp;
    sp.x_c = x_c0 + velocity * t;
    sp.x_c_dot = velocity;
    if (t >= t_on && t < t_off) {
      sp.s = s_base + s_amp * std::sin(t);
      sp.s_dot = s_amp * std::cos(t);
      sp.s_ddot = -s_amp * std::sin(t);
    } else {
      sp.s = s_base;
    }
    return sp;
  };
}

}  // namespace catrobot
