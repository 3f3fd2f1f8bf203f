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

#include "catrobot/min_snap.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "catrobot/errors.hpp"

namespace catrobot {
namespace {

constexpr int kOrder = 8;  // coefficients per segment (degree 7)

// Row of d-th derivative monomial values at normalized time tau in [0, 1],
// scaled by 1/T^d to express the derivative in real time.
Eigen::RowVectorXd derivative_row(double tau, int d, double T) {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(kOrder);
  for (int k = d; k < kOrder; ++k) {
    double coef = 1.0;
    for (int j = 0; j < d; ++j) coef *= static_cast<double>(k - j);
    row(k) = coef * std::pow(tau, k - d);
  }
  return row / std::pow(T, d);
}

// Gram matrix of squared snap over one segment in normalized time; the
// 1/T^7 factor converts to real time.
Eigen::MatrixXd snap_gram(double T) {
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(kOrder, kOrder);
  for (int j = 4; j < kOrder; ++j) {
    for (int k = 4; k < kOrder; ++k) {
      double cj = 1.0, ck = 1.0;
      for (int d = 0; d < 4; ++d) {
        cj *= static_cast<double>(j - d);
        ck *= static_cast<double>(k - d);
      }
      Q(j, k) = cj * ck / static_cast<double>(j + k - 7);
    }
  }
  return Q / std::pow(T, 7);
}

}  // namespace

std::vector<double> proportional_durations(
    const std::vector<Eigen::Vector3d>& waypoints, double total_time) {
  if (waypoints.size() < 2) {
    throw DomainError("proportional_durations: need at least two waypoints");
  }
  if (!(total_time > 0.0)) {
    throw DomainError("proportional_durations: total time must be positive");
  }
  const std::size_t n = waypoints.size() - 1;
  std::vector<double> dist(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = (waypoints[i + 1] - waypoints[i]).norm();
    sum += dist[i];
  }
  std::vector<double> out(n);
  if (sum <= 0.0) {
    std::fill(out.begin(), out.end(), total_time / static_cast<double>(n));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = total_time * dist[i] / sum;
  return out;
}

MinSnapTrajectory MinSnapTrajectory::solve(const WaypointPlan& plan) {
  const std::size_t m = plan.durations.size();
  if (plan.waypoints.size() < 2 || plan.waypoints.size() != m + 1) {
    throw DomainError("min snap: need n>=2 waypoints and n-1 durations");
  }
  for (double T : plan.durations) {
    if (!(T > 0.0) || !std::isfinite(T)) {
      throw SingularQP("min snap: non-positive segment duration");
    }
  }

  const int n_coef = kOrder * static_cast<int>(m);
  const int n_cons = 2 * static_cast<int>(m) + 6 + 4 * (static_cast<int>(m) - 1);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_cons, n_coef);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n_cons, 3);
  int row = 0;

  // Waypoint interpolation at both ends of every segment.
  for (std::size_t i = 0; i < m; ++i) {
    const int c0 = kOrder * static_cast<int>(i);
    A.block(row, c0, 1, kOrder) = derivative_row(0.0, 0, plan.durations[i]);
    b.row(row++) = plan.waypoints[i].transpose();
    A.block(row, c0, 1, kOrder) = derivative_row(1.0, 0, plan.durations[i]);
    b.row(row++) = plan.waypoints[i + 1].transpose();
  }
  // Rest-to-rest boundary: zero velocity/acceleration/jerk at both ends.
  for (int d = 1; d <= 3; ++d) {
    A.block(row++, 0, 1, kOrder) = derivative_row(0.0, d, plan.durations[0]);
    A.block(row++, kOrder * (static_cast<int>(m) - 1), 1, kOrder) =
        derivative_row(1.0, d, plan.durations[m - 1]);
  }
  // Continuity of velocity..snap across interior joints.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const int cl = kOrder * static_cast<int>(i);
    const int cr = cl + kOrder;
    for (int d = 1; d <= 4; ++d) {
      A.block(row, cl, 1, kOrder) = derivative_row(1.0, d, plan.durations[i]);
      A.block(row, cr, 1, kOrder) =
          -derivative_row(0.0, d, plan.durations[i + 1]);
      ++row;
    }
  }

  // Equality-constrained QP via the KKT system
  //   [2Q A^T] [c]   [0]
  //   [A   0 ] [y] = [b]
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n_coef + n_cons, n_coef + n_cons);
  for (std::size_t i = 0; i < m; ++i) {
    const int c0 = kOrder * static_cast<int>(i);
    kkt.block(c0, c0, kOrder, kOrder) = 2.0 * snap_gram(plan.durations[i]);
  }
  kkt.block(n_coef, 0, n_cons, n_coef) = A;
  kkt.block(0, n_coef, n_coef, n_cons) = A.transpose();

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n_coef + n_cons, 3);
  rhs.block(n_coef, 0, n_cons, 3) = b;

  Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
  if (!lu.isInvertible()) {
    throw SingularQP("min snap: rank-deficient constraint system");
  }
  const Eigen::MatrixXd solution = lu.solve(rhs);

  MinSnapTrajectory traj;
  traj.durations_ = plan.durations;
  traj.start_times_.resize(m);
  double t0 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    traj.start_times_[i] = t0;
    t0 += plan.durations[i];
  }
  traj.total_time_ = t0;
  traj.coefficients_ = solution.topRows(n_coef);
  traj.constraints_ = std::move(A);
  return traj;
}

Eigen::Vector3d MinSnapTrajectory::derivative(double t, int order) const {
  if (order > 7) return Eigen::Vector3d::Zero();
  const double tc = std::clamp(t, 0.0, total_time_);
  if ((t < 0.0 || t > total_time_) && order > 0) {
    return Eigen::Vector3d::Zero();  // hold the endpoints at rest
  }
  // Locate the segment; the upper boundary belongs to the last segment.
  std::size_t i = 0;
  while (i + 1 < durations_.size() &&
         tc >= start_times_[i] + durations_[i]) {
    ++i;
  }
  const double T = durations_[i];
  const double tau = std::clamp((tc - start_times_[i]) / T, 0.0, 1.0);
  const Eigen::RowVectorXd row = derivative_row(tau, order, T);
  return (row * coefficients_.block(kOrder * static_cast<int>(i), 0, kOrder, 3))
      .transpose();
}

double MinSnapTrajectory::snap_cost() const {
  return snap_cost(coefficients_, durations_);
}

double MinSnapTrajectory::snap_cost(const Eigen::MatrixXd& coefficients,
                                    const std::vector<double>& durations) {
  double cost = 0.0;
  for (std::size_t i = 0; i < durations.size(); ++i) {
    const Eigen::MatrixXd block =
        coefficients.block(kOrder * static_cast<int>(i), 0, kOrder, 3);
    const Eigen::MatrixXd Q = snap_gram(durations[i]);
    cost += (block.transpose() * Q * block).trace();
  }
  return cost;
}

SetpointTrajectory waypoint_trajectory(const WaypointPlan& plan) {
  auto traj = std::make_shared<MinSnapTrajectory>(MinSnapTrajectory::solve(plan));
  const double psi = plan.psi;
  const double s = plan.s;
  return [traj, psi, s](double t) {
    CatenarySetpoint sp;
    sp.x_c = traj->position(t);
    sp.x_c_dot = traj->derivative(t, 1);
    sp.x_c_ddot = traj->derivative(t, 2);
    sp.psi = psi;
    sp.s = s;
    return sp;
  };
}

}  // namespace catrobot
