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
#include <random>
#include <vector>

#include <doctest.h>

#include "catrobot/math_utils.hpp"
#include "catrobot/scenario.hpp"

using namespace catrobot;

namespace {

QuadrotorReference rest_reference(const Eigen::Vector3d& x, double psi = 0.0) {
  QuadrotorReference ref;
  ref.x = x;
  ref.psi = psi;
  return ref;
}

}  // namespace

TEST_CASE("zero errors and massless cable give hover thrust") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorState state;
  state.x = {0.0, 0.0, 1.0};
  const QuadrotorReference ref = rest_reference(state.x);
  const Eigen::Vector3d f_d =
      desired_force(ref, state, gains, params, Eigen::Vector3d::Zero(),
                    Eigen::Matrix3d::Identity());
  CHECK(f_d.isApprox(params.mass * params.gravity * kE3, 1e-15));
}

TEST_CASE("heavy cable tilts the desired force outward and above hover") {
  const QuadrotorParams params = QuadrotorParams::defaults(0.05639);
  const Gains gains = Gains::defaults_for_mass(params.mass);
  CableSpec cable{2.0, 0.05639};
  const CatenarySolution sol = solve_catenary(cable, 0.35);
  const TensionPair tp = tension_pair(cable, sol);

  QuadrotorState state;
  state.x = {0.0, -0.35, 1.0};
  const QuadrotorReference ref = rest_reference(state.x);
  const Eigen::Vector3d f_d = desired_force(
      ref, state, gains, params, tp.t_a, Eigen::Matrix3d::Identity());

  const double w = cable.weight_per_length();
  CHECK(f_d.y() == doctest::Approx(-w * sol.a).epsilon(1e-12));  // outward
  CHECK(f_d.z() == doctest::Approx(params.mass * params.gravity +
                                   w * cable.length / 2.0)
                       .epsilon(1e-9));
  CHECK(f_d.z() > params.mass * params.gravity);
}

TEST_CASE("position error enters through the proportional gain") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorState state;
  QuadrotorReference ref = rest_reference({0.1, 0.0, 0.0});
  const Eigen::Vector3d f_d =
      desired_force(ref, state, gains, params, Eigen::Vector3d::Zero(),
                    Eigen::Matrix3d::Identity());
  const Eigen::Vector3d hover = params.mass * params.gravity * kE3;
  CHECK((f_d - hover).isApprox(
      Eigen::Vector3d(gains.kp.x() * 0.1, 0.0, 0.0), 1e-12));
}

TEST_CASE("paper gravity sign cannot hover") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorState state;
  const QuadrotorReference ref = rest_reference(state.x);
  const Eigen::Vector3d f_d =
      desired_force(ref, state, gains, params, Eigen::Vector3d::Zero(),
                    Eigen::Matrix3d::Identity(), /*paper_gravity_sign=*/true);
  CHECK(f_d.z() < 0.0);  // points down; the hover test fails by construction
}

TEST_CASE("desired attitude from hover force is the yaw rotation") {
  const double mg = 0.132 * 9.81;
  const auto r0 = desired_attitude(mg * kE3, 0.0);
  REQUIRE(r0.has_value());
  CHECK(r0->isApprox(Eigen::Matrix3d::Identity(), 1e-14));

  const auto r90 = desired_attitude(mg * kE3, M_PI / 2);
  REQUIRE(r90.has_value());
  CHECK(r90->isApprox(rot_z(M_PI / 2), 1e-14));
}

TEST_CASE("tilted force keeps the construction orthonormal") {
  const Eigen::Vector3d f_d =
      rot_z(0.3) * Eigen::Vector3d(0.0, std::sin(0.17), std::cos(0.17)) * 1.3;
  const auto rd = desired_attitude(f_d, 0.3);
  REQUIRE(rd.has_value());
  CHECK((rd->col(2) - f_d.normalized()).norm() <= 1e-12);
  CHECK((rd->transpose() * *rd - Eigen::Matrix3d::Identity()).norm() <= 1e-12);
  CHECK(rd->determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("attitude construction is scale invariant, thrust is not") {
  std::mt19937_64 rng(70);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> uscale(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector3d f_d{u(rng), u(rng), 1.0 + std::abs(u(rng))};
    const double psi = 3.0 * u(rng);
    const double lambda = uscale(rng);
    const auto r1 = desired_attitude(f_d, psi);
    const auto r2 = desired_attitude(lambda * f_d, psi);
    REQUIRE(r1.has_value());
    REQUIRE(r2.has_value());
    CHECK((*r1 - *r2).norm() <= 1e-12);
    const double f1 = thrust_projection(f_d, *r1, 1e9);
    const double f2 = thrust_projection(lambda * f_d, *r2, 1e9);
    CHECK(f2 == doctest::Approx(lambda * f1).epsilon(1e-12));
  }
}

TEST_CASE("random desired attitudes stay on the rotation group") {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> upsi(-6.0, 6.0);
  int accepted = 0;
  for (int i = 0; i < 10000; ++i) {
    const Eigen::Vector3d f_d{gauss(rng), gauss(rng), gauss(rng)};
    const auto rd = desired_attitude(f_d, upsi(rng));
    if (!rd.has_value()) continue;
    ++accepted;
    CHECK((rd->transpose() * *rd - Eigen::Matrix3d::Identity()).norm() <=
          1e-12);
    CHECK(rd->determinant() == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(accepted > 9900);  // degenerate directions are rare
}

TEST_CASE("degenerate force directions hold the previous attitude") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorController ctrl(params, gains);

  // Regular update caches a desired attitude.
  QuadrotorState state;
  state.x = {0.0, 0.0, 1.0};
  QuadrotorReference ref = rest_reference(state.x, 0.4);
  ctrl.update(ref, state, Eigen::Vector3d::Zero(), rot_z(0.4));
  const Eigen::Matrix3d held = ctrl.last_desired_attitude();

  // Force parallel to the heading: |z_d x x_c| < 1e-6.
  QuadrotorState far_state;
  far_state.x = {0.0, 0.0, 1.0};
  QuadrotorReference bad = rest_reference(
      far_state.x + Eigen::Vector3d(1.0, 0.0, 0.0), 0.0);
  bad.x_ddot = -params.gravity * kE3;  // cancels the weight term
  ctrl.update(bad, far_state, Eigen::Vector3d::Zero(), Eigen::Matrix3d::Identity());
  CHECK(ctrl.attitude_hold_events() == 1);
  CHECK(ctrl.last_desired_attitude() == held);

  // A vanishing force vector is degenerate too.
  QuadrotorReference zero = rest_reference(far_state.x, 0.0);
  zero.x_ddot = -params.gravity * kE3;
  ctrl.update(zero, far_state, Eigen::Vector3d::Zero(), Eigen::Matrix3d::Identity());
  CHECK(ctrl.attitude_hold_events() == 2);
}

TEST_CASE("controller counts thrust saturation events") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorController ctrl(params, gains);
  QuadrotorState state;
  const QuadrotorReference far = rest_reference({50.0, 0.0, 50.0});
  const ControlCommand cmd =
      ctrl.update(far, state, Eigen::Vector3d::Zero(),
                  Eigen::Matrix3d::Identity());
  CHECK(cmd.thrust == params.f_max);
  CHECK(ctrl.thrust_clamp_events() == 1);
}

TEST_CASE("thrust projection basics") {
  const double mg = 0.132 * 9.81;
  CHECK(thrust_projection(mg * kE3, Eigen::Matrix3d::Identity(), 10.0) ==
        doctest::Approx(mg).epsilon(1e-15));

  const Eigen::Vector3d f_d{0.3, -0.2, 1.1};
  const auto rd = desired_attitude(f_d, 0.0);
  REQUIRE(rd.has_value());
  CHECK(thrust_projection(f_d, *rd, 10.0) ==
        doctest::Approx(f_d.norm()).epsilon(1e-12));

  bool clamped = false;
  CHECK(thrust_projection(-mg * kE3, Eigen::Matrix3d::Identity(), 10.0,
                          &clamped) == 0.0);
  CHECK(clamped);
  clamped = false;
  CHECK(thrust_projection(100.0 * kE3, Eigen::Matrix3d::Identity(), 2.0,
                          &clamped) == 2.0);
  CHECK(clamped);
}

TEST_CASE("attitude torque vanishes at the setpoint and restores small yaw "
          "offsets") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  QuadrotorState state;
  CHECK(attitude_torque(state, Eigen::Matrix3d::Identity(), gains, params)
            .norm() == 0.0);

  state.R = rot_z(0.1);
  const Eigen::Vector3d tau =
      attitude_torque(state, Eigen::Matrix3d::Identity(), gains, params);
  CHECK(tau.z() < 0.0);
  CHECK(tau.x() == doctest::Approx(0.0));
  CHECK(tau.y() == doctest::Approx(0.0));
}

TEST_CASE("attitude torque saturates per component") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  Gains gains = Gains::defaults_for_mass(params.mass);
  gains.k_rot = 10.0;  // force saturation
  QuadrotorState state;
  state.R = rot_z(1.0);
  const Eigen::Vector3d tau =
      attitude_torque(state, Eigen::Matrix3d::Identity(), gains, params);
  CHECK(std::abs(tau.z()) == doctest::Approx(params.tau_max));
}

TEST_CASE("closed-loop attitude regulation converges from a large error") {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);

  CoupledState state;
  state.cable = {2.0, 0.0};
  state.quad_a.x = {0.0, -0.35, 1.0};
  state.quad_b.x = {0.0, 0.35, 1.0};
  const Eigen::Vector3d axis = Eigen::Vector3d(0.3, -0.5, 0.4).normalized();
  state.quad_a.R = so3_exp(axis * (55.0 * M_PI / 180.0));

  const Eigen::Matrix3d R_d = Eigen::Matrix3d::Identity();
  const ControlCommand hover_b{params.mass * params.gravity,
                               Eigen::Vector3d::Zero()};
  const double dt = 1e-3;
  ControlCommand cmd_a;
  double prev_err = 1e9;
  bool monotone = true;
  double err_at_2s = 1e9;
  for (int i = 0; i <= 2000; ++i) {
    if (i % 2 == 0) {  // 500 Hz attitude loop
      cmd_a.thrust = params.mass * params.gravity;
      cmd_a.torque = attitude_torque(state.quad_a, R_d, gains, params);
    }
    const double err = rotation_error(state.quad_a.R, R_d).norm();
    if (i * dt >= 0.05) {
      if (err > prev_err * 1.0001 + 1e-12) monotone = false;
      prev_err = err;
    }
    if (i == 2000) err_at_2s = err;
    state = step(state, cmd_a, hover_b, params, dt);
  }
  CHECK(monotone);
  CHECK(err_at_2s < 1e-3);
}

TEST_CASE("hover at the reference with tension feed-forward is a fixed "
          "point") {
  ScenarioSpec spec = builtin_scenario("exp1_2_cables");
  spec.sim.duration = 5.0;
  const RunTrace trace = run_scenario(spec);
  REQUIRE_FALSE(trace.rows.empty());
  const Eigen::Vector3d drift_a = trace.rows.back().x_a - trace.rows.front().x_a;
  const Eigen::Vector3d drift_b = trace.rows.back().x_b - trace.rows.front().x_b;
  CHECK(drift_a.norm() <= 1e-4);
  CHECK(drift_b.norm() <= 1e-4);
}

TEST_CASE("tracking energy does not grow after the transient") {
  // Varying-span scenario, sampled at controller ticks.
  ScenarioSpec spec = builtin_scenario("exp1_flower");
  const SetpointTrajectory traj = build_trajectory(spec.trajectory);

  CatenarySetpoint sp0 = traj(0.0);
  const auto [ra0, rb0] = setpoint_to_references(sp0, spec.cable);
  CoupledState state;
  state.cable = spec.cable;
  state.quad_a.x = ra0.x;
  state.quad_b.x = rb0.x;

  QuadrotorController ctrl_a(spec.vehicle, spec.gains);
  QuadrotorController ctrl_b(spec.vehicle, spec.gains);

  const double dt = 1e-3;
  const int ctrl_every = 2;
  const double t_end = 20.0;
  ControlCommand cmd_a, cmd_b;
  std::vector<double> window_mean;
  double acc = 0.0;
  long count = 0;
  double window_end = 10.0;  // windows [5,10), [10,15), [15,20)

  for (long i = 0; i * dt <= t_end; ++i) {
    const double t = i * dt;
    if (i % ctrl_every == 0) {
      const CatenarySetpoint sp = traj(t);
      const CatenarySolution sol =
          solve_catenary(spec.cable, sp.s, sp.s_dot, sp.s_ddot);
      const auto [ra, rb] = setpoint_to_references(sp, sol);
      const Eigen::Matrix3d R_C = rot_z(sp.psi);
      const TensionPair tp = tension_pair(spec.cable, sol);
      cmd_a = ctrl_a.update(ra, state.quad_a, tp.t_a, R_C);
      cmd_b = ctrl_b.update(rb, state.quad_b, tp.t_b, R_C);
      if (t >= 5.0) {
        if (t >= window_end) {
          window_mean.push_back(acc / static_cast<double>(count));
          acc = 0.0;
          count = 0;
          window_end += 5.0;
        }
        const TrackingError ea = tracking_error(ra, state.quad_a);
        const TrackingError eb = tracking_error(rb, state.quad_b);
        acc += ea.e_p.squaredNorm() + ea.e_v.squaredNorm() +
               eb.e_p.squaredNorm() + eb.e_v.squaredNorm();
        ++count;
      }
    }
    state = step(state, cmd_a, cmd_b, spec.vehicle, dt);
  }
  if (count > 0) window_mean.push_back(acc / static_cast<double>(count));
  REQUIRE(window_mean.size() >= 3);
  for (std::size_t k = 1; k < window_mean.size(); ++k) {
    CHECK(window_mean[k] <= window_mean[k - 1] * 1.05 + 1e-12);
  }
}
