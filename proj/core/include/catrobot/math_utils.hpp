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

#include <Eigen/Dense>

namespace catrobot {

inline const Eigen::Vector3d kE1{1.0, 0.0, 0.0};
inline const Eigen::Vector3d kE2{0.0, 1.0, 0.0};
inline const Eigen::Vector3d kE3{0.0, 0.0, 1.0};

// Cross-product (hat) matrix: skew(v) * u == v x u.
Eigen::Matrix3d skew(const Eigen::Vector3d& v);

// Inverse of skew for a skew-symmetric matrix.
Eigen::Vector3d vee(const Eigen::Matrix3d& m);

// Rotation about the world z-axis.
Eigen::Matrix3d rot_z(double psi);

struct RotzDerivatives {
  Eigen::Matrix3d R;
  Eigen::Matrix3d R_dot;
  Eigen::Matrix3d R_ddot;
};

// Rot_z(psi) with its first two time derivatives for a yaw signal
// (psi, psi_dot, psi_ddot).
RotzDerivatives rotz_derivatives(double psi, double psi_dot, double psi_ddot);

// Rotation matrix from a body rotation vector via the exponential map.
Eigen::Matrix3d so3_exp(const Eigen::Vector3d& phi);

// Nearest rotation matrix in the Frobenius sense (polar projection).
Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& R);

// Intrinsic Z-Y-X (yaw-pitch-roll) angles of a rotation matrix.
struct EulerZyx {
  double roll;
  double pitch;
  double yaw;
};
EulerZyx euler_zyx(const Eigen::Matrix3d& R);

// Wrap an angle to (-pi, pi].
double wrap_to_pi(double angle);

// sinh(x) - x*cosh(x), series-expanded for small |x| where the naive form
// cancels catastrophically. Strictly negative for x > 0.
double sinh_minus_x_cosh(double x);

// a*(cosh(r/a) - 1) evaluated as 2*a*sinh^2(r/(2a)) to avoid cancellation.
double cosh_sag(double a, double r);

}  // namespace catrobot
