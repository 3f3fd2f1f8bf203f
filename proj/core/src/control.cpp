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

#include "catrobot/control.hpp"

#include <cmath>

#include "catrobot/math_utils.hpp"

namespace catrobot {
namespace {

constexpr double kMinForceNorm = 1e-6;      // N
constexpr double kMinCrossNorm = 1e-6;      // degenerate heading guard

}  // namespace

Gains Gains::defaults_for_mass(double mass) {
  Gains g;
  g.kp = Eigen::Vector3d::Constant(20.0 * mass);
  g.kv = Eigen::Vector3d::Constant(8.0 * mass);
  return g;
}

void Gains::validate() const {
  if (!(kp.minCoeff() > 0.0) || !(kv.minCoeff() > 0.0)) {
    throw DomainError("position/velocity gains must be positive");
  }
  if (!(k_rot > 0.0) || !(k_omega > 0.0)) {
    throw DomainError("attitude gains must be positive");
  }
}

TrackingError tracking_error(const QuadrotorReference& ref,
                             const QuadrotorState& state) {
  return {ref.x - state.x, ref.x_dot - state.v};
}

Eigen::Vector3d desired_force(const QuadrotorReference& ref,
                              const QuadrotorState& state, const Gains& gains,
                              const QuadrotorParams& params,
                              const Eigen::Vector3d& tension_catenary,
                              const Eigen::Matrix3d& R_C,
                              bool paper_gravity_sign) {
  const TrackingError err = tracking_error(ref, state);
  const double weight_sign = paper_gravity_sign ? -1.0 : 1.0;
  return gains.kp.asDiagonal() * err.e_p + gains.kv.asDiagonal() * err.e_v +
         params.mass * ref.x_ddot +
         weight_sign * params.mass * params.gravity * kE3 +
         R_C * tension_catenary;
}

std::optional<Eigen::Matrix3d> desired_attitude(const Eigen::Vector3d& f_d,
                                                double psi) {
  const double norm = f_d.norm();
  if (norm <= kMinForceNorm) return std::nullopt;
  const Eigen::Vector3d z_d = f_d / norm;
  const Eigen::Vector3d heading = rot_z(psi) * kE1;
  const Eigen::Vector3d cross = z_d.cross(heading);
  const double cross_norm = cross.norm();
  if (cross_norm < kMinCrossNorm) return std::nullopt;
  const Eigen::Vector3d y_d = cross / cross_norm;
  const Eigen::Vector3d x_d = y_d.cross(z_d).normalized();
  Eigen::Matrix3d R_d;
  R_d.col(0) = x_d;
  R_d.col(1) = y_d;
  R_d.col(2) = z_d;
  return R_d;
}

double thrust_projection(const Eigen::Vector3d& f_d, const Eigen::Matrix3d& R_d,
                         double f_max, bool* clamped) {
  const double raw = f_d.dot(R_d.col(2));
  const double f = std::clamp(raw, 0.0, f_max);
  if (clamped != nullptr) *clamped = (f != raw);
  return f;
}

Eigen::Vector3d rotation_error(const Eigen::Matrix3d& R,
                               const Eigen::Matrix3d& R_d) {
  return 0.5 * vee(R_d.transpose() * R - R.transpose() * R_d);
}

Eigen::Vector3d attitude_torque(const QuadrotorState& state,
                                const Eigen::Matrix3d& R_d, const Gains& gains,
                                const QuadrotorParams& params) {
  const Eigen::Vector3d e_r = rotation_error(state.R, R_d);
  const Eigen::Vector3d tau = -gains.k_rot * e_r - gains.k_omega * state.omega +
                              state.omega.cross(params.inertia * state.omega);
  return tau.cwiseMax(-params.tau_max).cwiseMin(params.tau_max);
}

QuadrotorController::QuadrotorController(const QuadrotorParams& params,
                                         const Gains& gains,
                                         bool paper_gravity_sign)
    : params_(params), gains_(gains), paper_gravity_sign_(paper_gravity_sign) {
  params_.validate();
  gains_.validate();
}

ControlCommand QuadrotorController::update(
    const QuadrotorReference& ref, const QuadrotorState& state,
    const Eigen::Vector3d& tension_catenary, const Eigen::Matrix3d& R_C) {
  const Eigen::Vector3d f_d = desired_force(
      ref, state, gains_, params_, tension_catenary, R_C, paper_gravity_sign_);
  if (auto R_d = desired_attitude(f_d, ref.psi)) {
    last_R_d_ = *R_d;
  } else {
    ++attitude_holds_;
  }
  ControlCommand cmd;
  bool clamped = false;
  cmd.thrust = thrust_projection(f_d, last_R_d_, params_.f_max, &clamped);
  if (clamped) ++thrust_clamps_;
  cmd.torque = attitude_torque(state, last_R_d_, gains_, params_);
  return cmd;
}

}  // namespace catrobot
