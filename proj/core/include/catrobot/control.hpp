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

#include <optional>

#include <Eigen/Dense>

#include "catrobot/dynamics.hpp"
#include "catrobot/trajectory.hpp"

namespace catrobot {

// Diagonal position/velocity gains plus scalar attitude gains.
struct Gains {
  Eigen::Vector3d kp = Eigen::Vector3d::Constant(2.64);   // N/m
  Eigen::Vector3d kv = Eigen::Vector3d::Constant(1.056);  // N s/m
  double k_rot = 0.04;     // N m per unit rotation error
  double k_omega = 0.003;  // N m s

  // Position loop scaled with the vehicle mass: kp = 20 m, kv = 8 m gives a
  // 4.5 rad/s loop at damping 0.9, fast enough to absorb the span-rate jumps
  // of the traverse trajectory before the near-taut sag geometry amplifies
  // them. k_omega stays below 2 J / T_sense so the rate damping remains
  // stable with 120 Hz sensing.
  static Gains defaults_for_mass(double mass);
  void validate() const;
};

struct TrackingError {
  Eigen::Vector3d e_p;  // x_ref - x
  Eigen::Vector3d e_v;  // v_ref - v
};
TrackingError tracking_error(const QuadrotorReference& ref,
                             const QuadrotorState& state);

// Desired world-frame force: PD tracking terms, acceleration feed-forward,
// weight compensation, and the cable tension feed-forward rotated from the
// catenary frame.
//
// paper_gravity_sign flips the weight term to -m*g*e3 (the alternative sign
// convention); a loop closed around it cannot hover, so the flag exists for
// comparison runs only.
Eigen::Vector3d desired_force(const QuadrotorReference& ref,
                              const QuadrotorState& state, const Gains& gains,
                              const QuadrotorParams& params,
                              const Eigen::Vector3d& tension_catenary,
                              const Eigen::Matrix3d& R_C,
                              bool paper_gravity_sign = false);

// Desired attitude from the force direction and the heading yaw: body z
// along f_d, body x as close to Rot_z(psi)*e1 as the tilt allows. Returns
// nullopt when |f_d| <= 1e-6 N or the thrust is parallel to the heading
// vector; callers hold the previous attitude in that case.
std::optional<Eigen::Matrix3d> desired_attitude(const Eigen::Vector3d& f_d,
                                                double psi);

// Scalar thrust: projection of the desired force on the desired body z-axis,
// clamped to [0, f_max]. Sets *clamped when the bound was hit.
double thrust_projection(const Eigen::Vector3d& f_d, const Eigen::Matrix3d& R_d,
                         double f_max, bool* clamped = nullptr);

// Rotation-group attitude law: tau = -k_R e_R - k_omega omega + omega x J
// omega with e_R = vee(R_d^T R - R^T R_d)/2, clamped per component. The
// desired angular velocity is zero (setpoint attitude regulation).
Eigen::Vector3d attitude_torque(const QuadrotorState& state,
                                const Eigen::Matrix3d& R_d, const Gains& gains,
                                const QuadrotorParams& params);

// Attitude error magnitude used by the regulation criteria.
Eigen::Vector3d rotation_error(const Eigen::Matrix3d& R,
                               const Eigen::Matrix3d& R_d);

// Per-vehicle tracking controller: wires the force law, attitude extraction,
// thrust projection and torque law together, holding the last attitude
// through degenerate force directions and counting saturation events.
class QuadrotorController {
 public:
  QuadrotorController(const QuadrotorParams& params, const Gains& gains,
                      bool paper_gravity_sign = false);

  // tension_catenary is the compensation tension at this vehicle's cable end
  // in the catenary frame; R_C the catenary frame rotation.
  ControlCommand update(const QuadrotorReference& ref,
                        const QuadrotorState& state,
                        const Eigen::Vector3d& tension_catenary,
                        const Eigen::Matrix3d& R_C);

  const Eigen::Matrix3d& last_desired_attitude() const { return last_R_d_; }
  long thrust_clamp_events() const { return thrust_clamps_; }
  long attitude_hold_events() const { return attitude_holds_; }

 private:
  QuadrotorParams params_;
  Gains gains_;
  bool paper_gravity_sign_;
  Eigen::Matrix3d last_R_d_ = Eigen::Matrix3d::Identity();
  long thrust_clamps_ = 0;
  long attitude_holds_ = 0;
};

}  // namespace catrobot
