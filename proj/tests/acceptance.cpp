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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its measured figure; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "catrobot/control.hpp"
#include "catrobot/dynamics.hpp"
#include "catrobot/math_utils.hpp"
#include "catrobot/min_snap.hpp"
#include "catrobot/scenario.hpp"
#include "catrobot/trajectory.hpp"
#include "oracles.hpp"

using namespace catrobot;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

double wall_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// --- 1. solver round-trip ---------------------------------------------------

bool criterion_round_trip(std::string& detail) {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> ua(0.05, 2.0);
  std::uniform_real_distribution<double> ux(0.01, 5.0);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng);
    const double x = ux(rng);
    const double recovered = solve_a(2.0 * a * std::sinh(x), a * x);
    worst = std::max(worst, std::abs(recovered - a) / a);
  }
  const double wall = wall_seconds(t0);
  detail = fmt("max rel err %.3g, %.3f s for 1000 solves", worst, wall);
  return worst <= 1e-9 && wall < 1.0;
}

// --- 2. arc-length conservation ---------------------------------------------

bool criterion_arc_length(std::string& detail) {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> ua(0.05, 2.0);
  std::uniform_real_distribution<double> ux(0.01, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = ua(rng);
    const double x = ux(rng);
    const double s = a * x;
    const double length = 2.0 * a * std::sinh(x);
    const double a_solved = solve_a(length, s);
    const double arc = oracles::arc_length_trapezoid(a_solved, s);
    worst = std::max(worst, std::abs(arc - length) / length);
  }
  detail = fmt("max rel err %.3g over 100 configurations", worst);
  return worst <= 1e-6;
}

// --- 3. derivative oracles ---------------------------------------------------

bool criterion_derivative_oracles(std::string& detail) {
  const CableSpec cable{2.0, 0.0076};
  const auto span = [](double t) { return 0.35 + 0.15 * std::cos(t); };
  const auto span_dot = [](double t) { return -0.15 * std::sin(t); };
  const auto span_ddot = [](double t) { return -0.15 * std::cos(t); };
  const SetpointTrajectory traj =
      flower_trajectory({0.0, 0.0, 0.4}, 0.1, 0.35, 0.15);

  const auto a_of_t = [&](double t) { return oracles::solve_a(2.0, span(t)); };

  double worst_first = 0.0, worst_second = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double t = 0.3 + 0.3 * k;

    // Curve parameter rates.
    const double a = solve_a(2.0, span(t));
    const CurveParameterRates rates =
        solve_a_derivatives(a, span(t), span_dot(t), span_ddot(t));
    const double adot_fd = oracles::central_diff(a_of_t, t, 1e-5);
    const double addot_fd = oracles::second_central_diff(a_of_t, t, 1e-3);
    worst_first = std::max(worst_first, std::abs(rates.a_dot - adot_fd) /
                                            std::max(1e-3, std::abs(adot_fd)));
    worst_second =
        std::max(worst_second, std::abs(rates.a_ddot - addot_fd) /
                                   std::max(1e-3, std::abs(addot_fd)));

    // Endpoint references along the full varying-span trajectory.
    const auto [ra, rb] = setpoint_to_references(traj(t), cable);
    for (bool a_side : {true, false}) {
      const QuadrotorReference& ref = a_side ? ra : rb;
      Eigen::Vector3d v_fd, acc_fd;
      for (int axis = 0; axis < 3; ++axis) {
        const auto pos = [&](double tt) {
          const auto [paa, pbb] = setpoint_to_references(traj(tt), cable);
          return a_side ? paa.x(axis) : pbb.x(axis);
        };
        v_fd(axis) = oracles::central_diff(pos, t, 1e-5);
        acc_fd(axis) = oracles::second_central_diff(pos, t, 1e-3);
      }
      worst_first = std::max(worst_first, (ref.x_dot - v_fd).norm() /
                                              std::max(1.0, v_fd.norm()));
      worst_second = std::max(worst_second, (ref.x_ddot - acc_fd).norm() /
                                                std::max(1.0, acc_fd.norm()));
    }
  }
  detail = fmt("first-derivative err %.3g (<=1e-5), second %.3g (<=1e-4)",
               worst_first, worst_second);
  return worst_first <= 1e-5 && worst_second <= 1e-4;
}

// --- 4. vertical force balance ----------------------------------------------

bool criterion_force_balance(std::string& detail) {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> ua(0.05, 2.0);
  std::uniform_real_distribution<double> ux(0.01, 5.0);
  std::uniform_real_distribution<double> um(0.001, 0.2);
  double worst_classical = 0.0;
  double least_paper_violation = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng);
    const double x = ux(rng);
    CableSpec cable;
    cable.length = 2.0 * a * std::sinh(x);
    cable.mass = um(rng);
    const CatenarySolution sol = solve_catenary(cable, a * x);
    const double weight = cable.mass * kDefaultGravity;

    const TensionPair classical =
        tension_pair(cable, sol, TensionMode::kClassical);
    worst_classical =
        std::max(worst_classical,
                 std::abs(classical.t_a.z() + classical.t_b.z() - weight) /
                     weight);

    const TensionPair paper = tension_pair(cable, sol, TensionMode::kPaper);
    least_paper_violation =
        std::min(least_paper_violation,
                 std::abs(paper.t_a.z() + paper.t_b.z() - weight) / weight);
  }
  detail = fmt("classical imbalance %.3g (<=1e-12); paper mode always off by "
               ">= %.3g",
               worst_classical, least_paper_violation);
  return worst_classical <= 1e-12 && least_paper_violation >= 1e-3;
}

// --- 5. flower scenario tracking ----------------------------------------------

bool criterion_flower(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioSpec spec = builtin_scenario("exp1_flower");
  const RunTrace trace = run_scenario(spec);
  const double wall = wall_seconds(t0);
  if (trace.diverged) {
    detail = "run diverged";
    return false;
  }
  const SummaryStats s = compute_stats(trace, 5.0);
  detail = fmt("rms pos %.4g m (<=0.02), span %.4g m (<=0.01), yaw %.4g rad "
               "(<=0.02), wall %.1f s",
               s.rms_pos, s.rms_span, s.rms_psi, wall);
  return s.rms_pos <= 0.02 && s.rms_span <= 0.01 && s.rms_psi <= 0.02 &&
         wall <= 60.0;
}

// --- 6. traverse altitude hold -----------------------------------------------

bool criterion_traverse(std::string& detail) {
  const ScenarioSpec spec = builtin_scenario("exp2_traverse");
  const RunTrace trace = run_scenario(spec);
  if (trace.diverged) {
    detail = "run diverged";
    return false;
  }
  double worst = 0.0;
  for (const TraceRow& row : trace.rows) {
    if (row.t < 4.0 * M_PI || row.t > 5.0 * M_PI) continue;
    worst = std::max(worst, std::abs(row.x_c.z() - 0.3));
  }
  detail = fmt("max altitude deviation %.4g m (<=0.05) during the span "
               "excursion",
               worst);
  return worst <= 0.05;
}

// --- 7. minimum snap ----------------------------------------------------------

bool criterion_min_snap(std::string& detail) {
  const std::vector<Eigen::Vector3d> waypoints = {
      {-1.6, -0.1, 0.6}, {0.0, -0.2, 0.6}, {0.6, 0.17, 0.509}, {0.8, 0.7, 1.0}};
  WaypointPlan plan;
  plan.waypoints = waypoints;
  plan.durations = proportional_durations(waypoints, 20.0);
  const MinSnapTrajectory traj = MinSnapTrajectory::solve(plan);

  double worst_interp = 0.0;
  double knot = 0.0;
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    worst_interp =
        std::max(worst_interp, (traj.position(knot) - waypoints[i]).norm());
    if (i < plan.durations.size()) knot += plan.durations[i];
  }

  // Joint continuity through snap via one-sided evaluations.
  double worst_joint = 0.0;
  double t_joint = plan.durations[0];
  for (std::size_t j = 1; j + 1 < waypoints.size(); ++j) {
    for (int order = 0; order <= 4; ++order) {
      const Eigen::Vector3d left = traj.derivative(t_joint - 1e-12, order);
      const Eigen::Vector3d right = traj.derivative(t_joint + 1e-12, order);
      worst_joint = std::max(worst_joint, (left - right).norm());
    }
    t_joint += plan.durations[j];
  }

  const ScenarioSpec spec = builtin_scenario("exp3_umbrella");
  const RunTrace trace = run_scenario(spec);
  if (trace.diverged) {
    detail = "closed-loop run diverged";
    return false;
  }
  const SummaryStats s = compute_stats(trace, 5.0);
  detail = fmt("interp %.3g m (<=1e-6), joints %.3g (<=1e-6), closed-loop rms "
               "%.4g m (<=0.05)",
               worst_interp, worst_joint, s.rms_pos);
  return worst_interp <= 1e-6 && worst_joint <= 1e-6 && s.rms_pos <= 0.05;
}

// --- 8. heavy-cable compensation ----------------------------------------------

bool criterion_heavy_cable(std::string& detail) {
  ScenarioSpec on = builtin_scenario("exp1_2_cables");
  ScenarioSpec off = on;
  off.feedforward = FeedforwardMode::kOff;

  const RunTrace trace_on = run_scenario(on);
  const RunTrace trace_off = run_scenario(off);
  if (trace_on.diverged || trace_off.diverged) {
    detail = "run diverged";
    return false;
  }

  // Steady state over the last five seconds.
  const auto steady = [](const RunTrace& trace) {
    double err = 0.0, roll_a = 0.0, roll_b = 0.0;
    std::size_t n = 0;
    for (const TraceRow& row : trace.rows) {
      if (row.t < trace.rows.back().t - 5.0) continue;
      err += (row.x_c - row.x_c_d).norm();
      roll_a += row.roll_a;
      roll_b += row.roll_b;
      ++n;
    }
    return std::array<double, 3>{err / n, roll_a / n, roll_b / n};
  };
  const auto [err_on, roll_a, roll_b] = steady(trace_on);
  const auto [err_off, roll_a_off, roll_b_off] = steady(trace_off);
  (void)roll_a_off;
  (void)roll_b_off;

  const double deg = 180.0 / M_PI;
  detail = fmt("steady err on %.4g m (<=0.02) vs off %.4g m (>=1.5x), rolls "
               "%+.2f/%+.2f deg (>0.5)",
               err_on, err_off, roll_a * deg, roll_b * deg);
  return err_on <= 0.02 && err_off >= 1.5 * err_on &&
         roll_a > 0.5 / deg && roll_b < -0.5 / deg;
}

// --- 9. attitude regulation ----------------------------------------------------

bool criterion_attitude(std::string& detail) {
  const QuadrotorParams params = QuadrotorParams::defaults();
  const Gains gains = Gains::defaults_for_mass(params.mass);
  std::mt19937_64 rng(1009);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uangle(0.05, 59.0 * M_PI / 180.0);

  double worst_final = 0.0;
  for (int run = 0; run < 50; ++run) {
    Eigen::Vector3d axis{gauss(rng), gauss(rng), gauss(rng)};
    axis.normalize();
    CoupledState state;
    state.cable = {2.0, 0.0};
    state.quad_a.x = {0.0, -0.35, 1.0};
    state.quad_b.x = {0.0, 0.35, 1.0};
    state.quad_a.R = so3_exp(axis * uangle(rng));

    const Eigen::Matrix3d R_d = Eigen::Matrix3d::Identity();
    const ControlCommand hover_b{params.mass * params.gravity,
                                 Eigen::Vector3d::Zero()};
    ControlCommand cmd_a;
    const double dt = 1e-3;
    for (int i = 0; i < 2000; ++i) {
      if (i % 2 == 0) {
        cmd_a.thrust = params.mass * params.gravity;
        cmd_a.torque = attitude_torque(state.quad_a, R_d, gains, params);
      }
      state = step(state, cmd_a, hover_b, params, dt);
    }
    worst_final =
        std::max(worst_final, rotation_error(state.quad_a.R, R_d).norm());
  }
  detail = fmt("worst |e_R| after 2 s: %.3g (<1e-3) over 50 random attitudes",
               worst_final);
  return worst_final < 1e-3;
}

// --- 10. determinism and integrator order ---------------------------------------

bool criterion_determinism_order(std::string& detail) {
  ScenarioSpec spec = builtin_scenario("exp1_flower");
  spec.sim.duration = 3.0;
  const std::string csv1 = trace_to_csv(run_scenario(spec));
  const std::string csv2 = trace_to_csv(run_scenario(spec));
  const bool identical = (csv1 == csv2);

  // Convergence order on the final state, halving dt with the control and
  // log schedules held fixed (250 Hz ticks land on every grid used). The
  // start offset adds a stiff transient, and the short horizon samples the
  // state before the contracting closed loop squeezes the truncation
  // differences down to the rounding floor.
  const auto final_state = [](double dt) {
    ScenarioSpec s = builtin_scenario("exp1_flower");
    s.sim.dt = dt;
    s.sim.control_hz = 250.0;
    s.sim.duration = 1.0;
    s.sim.log_hz = 25.0;
    s.start_offset = {0.3, 0.0, 0.2};
    const RunTrace trace = run_scenario(s);
    Eigen::VectorXd v(6);
    v << trace.rows.back().x_a, trace.rows.back().x_b;
    return v;
  };
  const Eigen::VectorXd c1 = final_state(2e-3);
  const Eigen::VectorXd c2 = final_state(1e-3);
  const Eigen::VectorXd c3 = final_state(5e-4);
  const double err1 = (c1 - c2).norm();
  const double err2 = (c2 - c3).norm();
  const double order = std::log2(err1 / err2);
  detail = fmt("CSV identical: %s; |e(dt)|=%.3g |e(dt/2)|=%.3g -> order %.2f "
               "(>=3.5)",
               identical ? "yes" : "NO", err1, err2, order);
  return identical && order >= 3.5;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"catenary solver round-trip", criterion_round_trip},
      {"arc-length conservation", criterion_arc_length},
      {"derivative oracles", criterion_derivative_oracles},
      {"vertical force balance", criterion_force_balance},
      {"flower scenario tracking", criterion_flower},
      {"traverse altitude hold", criterion_traverse},
      {"minimum-snap waypoints", criterion_min_snap},
      {"heavy-cable compensation", criterion_heavy_cable},
      {"attitude regulation", criterion_attitude},
      {"determinism and integrator order", criterion_determinism_order},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%2zu/%zu] %s  %-35s %s\n", i + 1, criteria.size(),
                ok ? "PASS" : "FAIL", criteria[i].name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
