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

#include "catrobot/math_utils.hpp"

#include <cmath>

namespace catrobot {

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Vector3d vee(const Eigen::Matrix3d& m) {
  return {m(2, 1), m(0, 2), m(1, 0)};
}

Eigen::Matrix3d rot_z(double psi) {
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  Eigen::Matrix3d r;
  r << c, -s, 0.0,
       s, c, 0.0,
       0.0, 0.0, 1.0;
  return r;
}

RotzDerivatives rotz_derivatives(double psi, double psi_dot, double psi_ddot) {
  const Eigen::Matrix3d S = skew(kE3);
  RotzDerivatives out;
  out.R = rot_z(psi);
  out.R_dot = psi_dot * S * out.R;
  out.R_ddot = (psi_ddot * S + psi_dot * psi_dot * S * S) * out.R;
  return out;
}

Eigen::Matrix3d so3_exp(const Eigen::Vector3d& phi) {
  const double theta = phi.norm();
  const Eigen::Matrix3d K = skew(phi);
  double c1, c2;  // coefficients of K and K^2 in the Rodrigues formula
  if (theta < 1e-8) {
    c1 = 1.0 - theta * theta / 6.0;
    c2 = 0.5 - theta * theta / 24.0;
  } else {
    c1 = std::sin(theta) / theta;
    c2 = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Eigen::Matrix3d::Identity() + c1 * K + c2 * K * K;
}

Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& R) {
  // Newton-Schulz polar iteration, quadratically convergent; two sweeps take
  // a nearly-orthogonal matrix to machine precision.
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  if ((R.transpose() * R - I).cwiseAbs().maxCoeff() < 0.1) {
    Eigen::Matrix3d Q = R;
    Q = 0.5 * Q * (3.0 * I - Q.transpose() * Q);
    Q = 0.5 * Q * (3.0 * I - Q.transpose() * Q);
    return Q;
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      R, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d Q = svd.matrixU() * svd.matrixV().transpose();
  if (Q.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    Q = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return Q;
}

EulerZyx euler_zyx(const Eigen::Matrix3d& R) {
  EulerZyx e;
  e.roll = std::atan2(R(2, 1), R(2, 2));
  e.pitch = -std::asin(std::clamp(R(2, 0), -1.0, 1.0));
  e.yaw = std::atan2(R(1, 0), R(0, 0));
  return e;
}

double wrap_to_pi(double angle) {
  const double two_pi = 2.0 * M_PI;
  double a = std::fmod(angle + M_PI, two_pi);
  if (a <= 0.0) a += two_pi;
  return a - M_PI;
}

double sinh_minus_x_cosh(double x) {
  const double ax = std::abs(x);
  if (ax < 0.5) {
    // sinh(x) - x cosh(x) = -sum_{k>=1} 2k/(2k+1)! x^(2k+1)
    const double x2 = x * x;
    double term = x * x2;  // x^3
    double sum = 0.0;
    double fact = 6.0;     // (2k+1)! at k=1
    for (int k = 1; k <= 9; ++k) {
      sum += (2.0 * k / fact) * term;
      term *= x2;
      fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return -sum;
  }
  return std::sinh(x) - x * std::cosh(x);
}

double cosh_sag(double a, double r) {
  const double sh = std::sinh(r / (2.0 * a));
  return 2.0 * a * sh * sh;
}

}  // namespace catrobot
