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

#include "catrobot/dynamics.hpp"

#include <cmath>

#include "catrobot/math_utils.hpp"

namespace catrobot {
namespace {

constexpr double kCoincidentEndpointsTol = 1e-6;  // m

// Flattened derivative state of one vehicle for the RK4 stages. The rotation
// is tracked as a body rotation vector sigma relative to the step's initial
// attitude, advanced on the group via the exponential map.
struct VehicleDelta {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Eigen::Vector3d sigma = Eigen::Vector3d::Zero();
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();
};

struct StageState {
  VehicleDelta a;  // offsets from the step's initial state
  VehicleDelta b;
};

StageState advance(const StageState& base, double h, const StageState& k) {
  StageState out;
  out.a.x = base.a.x + h * k.a.x;
  out.a.v = base.a.v + h * k.a.v;
  out.a.sigma = base.a.sigma + h * k.a.sigma;
  out.a.omega = base.a.omega + h * k.a.omega;
  out.b.x = base.b.x + h * k.b.x;
  out.b.v = base.b.v + h * k.b.v;
  out.b.sigma = base.b.sigma + h * k.b.sigma;
  out.b.omega = base.b.omega + h * k.b.omega;
  return out;
}

// Inverse right-trivialized derivative of the exponential map, truncated at
// the order RK4 needs: sigma_dot = omega + sigma x omega / 2
//                                  + sigma x (sigma x omega) / 12.
Eigen::Vector3d dexpinv(const Eigen::Vector3d& sigma,
                        const Eigen::Vector3d& omega) {
  const Eigen::Vector3d c = sigma.cross(omega);
  return omega + 0.5 * c + sigma.cross(c) / 12.0;
}

struct VehicleInputs {
  double thrust;
  Eigen::Vector3d torque;
};

}  // namespace

QuadrotorParams QuadrotorParams::defaults(double cable_mass) {
  QuadrotorParams p;
  p.f_max = 2.0 * (p.mass + cable_mass) * p.gravity;
  return p;
}

void QuadrotorParams::validate() const {
  if (!(mass > 0.0)) throw DomainError("vehicle mass must be positive");
  if (!(gravity > 0.0)) throw DomainError("gravity must be positive");
  if (!inertia.isApprox(inertia.transpose(), 1e-12)) {
    throw DomainError("inertia tensor must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(inertia);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw DomainError("inertia tensor must be positive definite");
  }
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> cable_forces(
    const CoupledState& state, const SimOptions& opts, double gravity) {
  const double length = state.cable.length;
  const double w = state.cable.weight_per_length(gravity);
  const double half_weight = 0.5 * state.cable.mass * gravity;

  const Eigen::Vector3d d = state.quad_b.x - state.quad_a.x;
  const double chord = d.norm();

  if (chord >= length) {
    // Taut: penalty spring along the chord, cable weight split evenly.
    const Eigen::Vector3d u = d / chord;
    const Eigen::Vector3d pull = opts.k_taut * (chord - length) * u;
    return {pull - half_weight * kE3, -pull - half_weight * kE3};
  }
  if (state.cable.mass == 0.0) {
    return {Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
  }

  const Eigen::Vector3d d_h(d.x(), d.y(), 0.0);
  const double h = d_h.norm();
  if (h < kCoincidentEndpointsTol) {
    // Vertically stacked endpoints: hang model.
    const Eigen::Vector3d down = -half_weight * kE3;
    return {down, down};
  }

  TwoPointSolution tp;
  try {
    tp = solve_two_point(length, h, d.z(), opts.solver_tol);
  } catch (const DomainError&) {
    // Horizontal separation below the solver's span floor: the physical
    // limit is the vertical hang.
    const Eigen::Vector3d down = -half_weight * kE3;
    return {down, down};
  }

  const Eigen::Vector3d y_hat = d_h / h;
  const double eta_a = -0.5 * h - tp.vertex_offset;
  const double eta_b = 0.5 * h - tp.vertex_offset;
  // Tension at each end: constant horizontal component w*a pulling the
  // vehicles toward each other, vertical component carrying the arc between
  // the vertex and that end.
  Eigen::Vector3d f_a = w * tp.a * y_hat;
  f_a.z() += w * tp.a * std::sinh(eta_a / tp.a);
  Eigen::Vector3d f_b = -w * tp.a * y_hat;
  f_b.z() -= w * tp.a * std::sinh(eta_b / tp.a);
  return {f_a, f_b};
}

CoupledState step(const CoupledState& state, const ControlCommand& cmd_a,
                  const ControlCommand& cmd_b, const QuadrotorParams& params,
                  double dt, const SimOptions& opts) {
  if (!(dt > 0.0)) throw DomainError("step: dt must be positive");

  const auto clamp_cmd = [&](const ControlCommand& c) {
    VehicleInputs in;
    in.thrust = std::clamp(c.thrust, 0.0, params.f_max);
    in.torque = c.torque.cwiseMax(-params.tau_max).cwiseMin(params.tau_max);
    return in;
  };
  const VehicleInputs in_a = clamp_cmd(cmd_a);
  const VehicleInputs in_b = clamp_cmd(cmd_b);

  const Eigen::Matrix3d J = params.inertia;
  const Eigen::Matrix3d J_inv = params.inertia.inverse();
  const Eigen::Vector3d gravity_accel = -params.gravity * kE3;

  // Derivative of the offset state at an RK4 stage.
  const auto derivative = [&](const StageState& y) {
    CoupledState at = state;
    at.quad_a.x = state.quad_a.x + y.a.x;
    at.quad_a.v = state.quad_a.v + y.a.v;
    at.quad_a.R = state.quad_a.R * so3_exp(y.a.sigma);
    at.quad_a.omega = state.quad_a.omega + y.a.omega;
    at.quad_b.x = state.quad_b.x + y.b.x;
    at.quad_b.v = state.quad_b.v + y.b.v;
    at.quad_b.R = state.quad_b.R * so3_exp(y.b.sigma);
    at.quad_b.omega = state.quad_b.omega + y.b.omega;

    const auto [f_cable_a, f_cable_b] = cable_forces(at, opts, params.gravity);

    StageState k;
    k.a.x = at.quad_a.v;
    k.a.v = gravity_accel +
            (in_a.thrust * at.quad_a.R.col(2) + f_cable_a) / params.mass;
    k.a.sigma = dexpinv(y.a.sigma, at.quad_a.omega);
    k.a.omega = J_inv * (in_a.torque - at.quad_a.omega.cross(J * at.quad_a.omega));
    k.b.x = at.quad_b.v;
    k.b.v = gravity_accel +
            (in_b.thrust * at.quad_b.R.col(2) + f_cable_b) / params.mass;
    k.b.sigma = dexpinv(y.b.sigma, at.quad_b.omega);
    k.b.omega = J_inv * (in_b.torque - at.quad_b.omega.cross(J * at.quad_b.omega));
    return k;
  };

  const StageState zero;
  const StageState k1 = derivative(zero);
  const StageState k2 = derivative(advance(zero, 0.5 * dt, k1));
  const StageState k3 = derivative(advance(zero, 0.5 * dt, k2));
  const StageState k4 = derivative(advance(zero, dt, k3));

  CoupledState next = state;
  const auto apply = [&](QuadrotorState& q, const VehicleDelta& d1,
                         const VehicleDelta& d2, const VehicleDelta& d3,
                         const VehicleDelta& d4) {
    const double w1 = dt / 6.0, w2 = dt / 3.0;
    q.x += w1 * (d1.x + d4.x) + w2 * (d2.x + d3.x);
    q.v += w1 * (d1.v + d4.v) + w2 * (d2.v + d3.v);
    const Eigen::Vector3d sigma =
        w1 * (d1.sigma + d4.sigma) + w2 * (d2.sigma + d3.sigma);
    q.R = orthonormalize(q.R * so3_exp(sigma));
    q.omega += w1 * (d1.omega + d4.omega) + w2 * (d2.omega + d3.omega);
  };
  apply(next.quad_a, k1.a, k2.a, k3.a, k4.a);
  apply(next.quad_b, k1.b, k2.b, k3.b, k4.b);

  next.taut = (next.quad_b.x - next.quad_a.x).norm() >= state.cable.length;

  const auto check = [&](const QuadrotorState& q) {
    const double m = std::max({q.x.cwiseAbs().maxCoeff(),
                               q.v.cwiseAbs().maxCoeff(),
                               q.omega.cwiseAbs().maxCoeff()});
    if (!(m <= opts.divergence_limit)) {
      throw NumericalDivergence(
          "step: state component exceeded the divergence limit");
    }
  };
  check(next.quad_a);
  check(next.quad_b);
  return next;
}

LowestPoint lowest_point_from_state(const CoupledState& state, double tol) {
  if (state.taut) {
    throw TautCable("lowest_point_from_state: cable is taut");
  }
  const Eigen::Vector3d d = state.quad_b.x - state.quad_a.x;
  const Eigen::Vector3d d_h(d.x(), d.y(), 0.0);
  const double h = d_h.norm();
  if (h < kCoincidentEndpointsTol) {
    throw DegenerateGeometry(
        "lowest_point_from_state: endpoints horizontally coincident");
  }
  const TwoPointSolution tp = solve_two_point(state.cable.length, h, d.z(), tol);
  const Eigen::Vector3d y_hat = d_h / h;

  LowestPoint out;
  out.psi = std::atan2(-y_hat.x(), y_hat.y());
  out.s_est = 0.5 * h;
  if (std::abs(tp.vertex_offset) > 0.5 * h) {
    // Vertex beyond the endpoints: report the lower endpoint.
    out.clamped = true;
    out.x_c = (state.quad_a.x.z() <= state.quad_b.x.z()) ? state.quad_a.x
                                                         : state.quad_b.x;
    return out;
  }
  const double eta_a = -0.5 * h - tp.vertex_offset;
  const Eigen::Vector3d midpoint = 0.5 * (state.quad_a.x + state.quad_b.x);
  out.x_c = midpoint + tp.vertex_offset * y_hat;
  out.x_c.z() = state.quad_a.x.z() - cosh_sag(tp.a, eta_a);
  return out;
}

}  // namespace catrobot
