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

#include "catrobot/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "catrobot/math_utils.hpp"

namespace catrobot {
namespace {

using nlohmann::json;

json vec_to_json(const Eigen::Vector3d& v) {
  return json::array({v.x(), v.y(), v.z()});
}

Eigen::Vector3d vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw IoError("expected a 3-element array");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Eigen::Vector3d diag_from_json(const json& j) {
  if (j.is_number()) return Eigen::Vector3d::Constant(j.get<double>());
  return vec_from_json(j);
}

std::string tension_mode_name(TensionMode m) {
  return m == TensionMode::kClassical ? "classical" : "paper";
}

TensionMode tension_mode_from_name(const std::string& s) {
  if (s == "classical") return TensionMode::kClassical;
  if (s == "paper") return TensionMode::kPaper;
  throw IoError("unknown tension mode '" + s + "' (classical|paper)");
}

std::string feedforward_name(FeedforwardMode m) {
  switch (m) {
    case FeedforwardMode::kOff: return "off";
    case FeedforwardMode::kCommanded: return "on";
    case FeedforwardMode::kMeasured: return "measured";
  }
  return "on";
}

FeedforwardMode feedforward_from_name(const std::string& s) {
  if (s == "off") return FeedforwardMode::kOff;
  if (s == "on" || s == "commanded") return FeedforwardMode::kCommanded;
  if (s == "measured") return FeedforwardMode::kMeasured;
  throw IoError("unknown feedforward mode '" + s + "' (on|off|measured)");
}

json trajectory_to_json(const TrajectoryConfig& config) {
  json j;
  if (const auto* c = std::get_if<ConstantTrajConfig>(&config)) {
    j["type"] = "constant";
    j["x_c"] = vec_to_json(c->x_c);
    j["psi"] = c->psi;
    j["span"] = c->s;
  } else if (const auto* f = std::get_if<FlowerTrajConfig>(&config)) {
    j["type"] = "flower";
    j["x_c"] = vec_to_json(f->x_c);
    j["psi_rate"] = f->psi_rate;
    j["span_mean"] = f->s_mean;
    j["span_amp"] = f->s_amp;
    j["span_freq"] = f->s_freq;
  } else if (const auto* t = std::get_if<TraverseTrajConfig>(&config)) {
    j["type"] = "traverse";
    j["x_c0"] = vec_to_json(t->x_c0);
    j["velocity"] = vec_to_json(t->velocity);
    j["span_base"] = t->s_base;
    j["span_amp"] = t->s_amp;
    j["window"] = json::array({t->t_on, t->t_off});
  } else if (const auto* w = std::get_if<WaypointTrajConfig>(&config)) {
    j["type"] = "waypoints";
    json wps = json::array();
    for (const auto& p : w->waypoints) wps.push_back(vec_to_json(p));
    j["waypoints"] = std::move(wps);
    if (!w->durations.empty()) j["durations"] = w->durations;
    j["total_time_s"] = w->total_time;
    j["psi"] = w->psi;
    j["span"] = w->s;
  }
  return j;
}

TrajectoryConfig trajectory_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") {
    ConstantTrajConfig c;
    if (j.contains("x_c")) c.x_c = vec_from_json(j["x_c"]);
    c.psi = j.value("psi", c.psi);
    c.s = j.value("span", c.s);
    return c;
  }
  if (type == "flower") {
    FlowerTrajConfig f;
    if (j.contains("x_c")) f.x_c = vec_from_json(j["x_c"]);
    f.psi_rate = j.value("psi_rate", f.psi_rate);
    f.s_mean = j.value("span_mean", f.s_mean);
    f.s_amp = j.value("span_amp", f.s_amp);
    f.s_freq = j.value("span_freq", f.s_freq);
    return f;
  }
  if (type == "traverse") {
    TraverseTrajConfig t;
    if (j.contains("x_c0")) t.x_c0 = vec_from_json(j["x_c0"]);
    if (j.contains("velocity")) t.velocity = vec_from_json(j["velocity"]);
    t.s_base = j.value("span_base", t.s_base);
    t.s_amp = j.value("span_amp", t.s_amp);
    if (j.contains("window")) {
      t.t_on = j["window"].at(0).get<double>();
      t.t_off = j["window"].at(1).get<double>();
    }
    return t;
  }
  if (type == "waypoints") {
    WaypointTrajConfig w;
    for (const auto& p : j.at("waypoints")) {
      w.waypoints.push_back(vec_from_json(p));
    }
    if (j.contains("durations")) {
      w.durations = j["durations"].get<std::vector<double>>();
    }
    w.total_time = j.value("total_time_s", w.total_time);
    w.psi = j.value("psi", w.psi);
    w.s = j.value("span", w.s);
    return w;
  }
  throw IoError("unknown trajectory type '" + type + "'");
}

}  // namespace

SetpointTrajectory build_trajectory(const TrajectoryConfig& config) {
  if (const auto* c = std::get_if<ConstantTrajConfig>(&config)) {
    return constant_trajectory(c->x_c, c->psi, c->s);
  }
  if (const auto* f = std::get_if<FlowerTrajConfig>(&config)) {
    return flower_trajectory(f->x_c, f->psi_rate, f->s_mean, f->s_amp,
                             f->s_freq);
  }
  if (const auto* t = std::get_if<TraverseTrajConfig>(&config)) {
    return traverse_trajectory(t->x_c0, t->velocity, t->s_base, t->s_amp,
                               t->t_on, t->t_off);
  }
  const auto& w = std::get<WaypointTrajConfig>(config);
  WaypointPlan plan;
  plan.waypoints = w.waypoints;
  plan.durations = w.durations.empty()
                       ? proportional_durations(w.waypoints, w.total_time)
                       : w.durations;
  plan.psi = w.psi;
  plan.s = w.s;
  return waypoint_trajectory(plan);
}

void ScenarioSpec::validate() const {
  cable.validate();
  vehicle.validate();
  gains.validate();
  if (!(sim.dt > 0.0)) throw DomainError("sim.dt must be positive");
  if (!(sim.control_hz > 0.0)) throw DomainError("control rate must be positive");
  if (sim.dt > 1.0 / (2.0 * sim.control_hz)) {
    throw DomainError("sim.dt must not exceed half the control period");
  }
  if (!(sim.duration >= 0.0)) throw DomainError("duration must be >= 0");
  if (!(sim.log_hz > 0.0)) throw DomainError("log rate must be positive");
  if (sim.log_hz > 1.0 / sim.dt + 1e-9) {
    throw DomainError("log rate cannot exceed the step rate");
  }
  if (!(sim.sensing_hz >= 0.0)) {
    throw DomainError("sensing rate must be >= 0 (0 = ideal)");
  }
  if (!(k_taut > 0.0)) throw DomainError("k_taut must be positive");
}

std::string scenario_to_json(const ScenarioSpec& spec) {
  json j;
  j["schema_version"] = 1;
  j["name"] = spec.name;
  j["cable"] = {{"length_m", spec.cable.length}, {"mass_kg", spec.cable.mass}};
  j["vehicle"] = {
      {"mass_kg", spec.vehicle.mass},
      {"inertia_diag", vec_to_json(spec.vehicle.inertia.diagonal())},
      {"f_max", spec.vehicle.f_max},
      {"tau_max", spec.vehicle.tau_max},
      {"gravity", spec.vehicle.gravity},
  };
  j["gains"] = {
      {"kp", vec_to_json(spec.gains.kp)},
      {"kv", vec_to_json(spec.gains.kv)},
      {"kR", spec.gains.k_rot},
      {"kOmega", spec.gains.k_omega},
  };
  j["trajectory"] = trajectory_to_json(spec.trajectory);
  j["sim"] = {
      {"dt", spec.sim.dt},
      {"control_hz", spec.sim.control_hz},
      {"duration_s", spec.sim.duration},
      {"log_hz", spec.sim.log_hz},
      {"stats_window_s", spec.sim.stats_window_start},
      {"sensing_hz", spec.sim.sensing_hz},
  };
  j["modes"] = {
      {"tension", tension_mode_name(spec.tension_mode)},
      {"feedforward", feedforward_name(spec.feedforward)},
  };
  if (spec.paper_gravity_sign) j["modes"]["gravity_sign"] = "paper";
  j["k_taut"] = spec.k_taut;
  if (spec.start_offset != Eigen::Vector3d::Zero()) {
    j["initial"] = {{"x_c_offset", vec_to_json(spec.start_offset)}};
  }
  return j.dump(2);
}

ScenarioSpec scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid scenario JSON: ") + e.what());
  }
  try {
    if (j.contains("schema_version") && j["schema_version"].get<int>() != 1) {
      throw IoError("unsupported scenario schema_version (expected 1)");
    }
    ScenarioSpec spec;
    spec.name = j.value("name", spec.name);
    if (j.contains("cable")) {
      spec.cable.length = j["cable"].value("length_m", spec.cable.length);
      spec.cable.mass = j["cable"].value("mass_kg", spec.cable.mass);
    }
    if (j.contains("vehicle")) {
      const auto& jv = j["vehicle"];
      spec.vehicle.mass = jv.value("mass_kg", spec.vehicle.mass);
      if (jv.contains("inertia_diag")) {
        spec.vehicle.inertia = diag_from_json(jv["inertia_diag"]).asDiagonal();
      }
      spec.vehicle.gravity = jv.value("gravity", spec.vehicle.gravity);
      spec.vehicle.f_max = jv.value(
          "f_max", 2.0 * (spec.vehicle.mass + spec.cable.mass) *
                       spec.vehicle.gravity);
      spec.vehicle.tau_max = jv.value("tau_max", spec.vehicle.tau_max);
    } else {
      spec.vehicle = QuadrotorParams::defaults(spec.cable.mass);
    }
    spec.gains = Gains::defaults_for_mass(spec.vehicle.mass);
    if (j.contains("gains")) {
      const auto& jg = j["gains"];
      if (jg.contains("kp")) spec.gains.kp = diag_from_json(jg["kp"]);
      if (jg.contains("kv")) spec.gains.kv = diag_from_json(jg["kv"]);
      spec.gains.k_rot = jg.value("kR", spec.gains.k_rot);
      spec.gains.k_omega = jg.value("kOmega", spec.gains.k_omega);
    }
    if (j.contains("trajectory")) {
      spec.trajectory = trajectory_from_json(j["trajectory"]);
    }
    if (j.contains("sim")) {
      const auto& js = j["sim"];
      spec.sim.dt = js.value("dt", spec.sim.dt);
      spec.sim.control_hz = js.value("control_hz", spec.sim.control_hz);
      spec.sim.duration = js.value("duration_s", spec.sim.duration);
      spec.sim.log_hz = js.value("log_hz", spec.sim.log_hz);
      spec.sim.stats_window_start =
          js.value("stats_window_s", spec.sim.stats_window_start);
      spec.sim.sensing_hz = js.value("sensing_hz", spec.sim.sensing_hz);
    }
    if (j.contains("modes")) {
      const auto& jm = j["modes"];
      if (jm.contains("tension")) {
        spec.tension_mode =
            tension_mode_from_name(jm["tension"].get<std::string>());
      }
      if (jm.contains("feedforward")) {
        spec.feedforward =
            feedforward_from_name(jm["feedforward"].get<std::string>());
      }
      spec.paper_gravity_sign = jm.value("gravity_sign", "") == "paper";
    }
    spec.k_taut = j.value("k_taut", spec.k_taut);
    if (j.contains("initial") && j["initial"].contains("x_c_offset")) {
      spec.start_offset = vec_from_json(j["initial"]["x_c_offset"]);
    }
    return spec;
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid scenario JSON: ") + e.what());
  }
}

ScenarioSpec load_scenario(const std::string& name_or_path) {
  const bool looks_like_path =
      name_or_path.find('/') != std::string::npos ||
      name_or_path.find(".json") != std::string::npos;
  if (!looks_like_path) return builtin_scenario(name_or_path);
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file " + name_or_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scenario_from_json(ss.str());
}

std::vector<std::string> builtin_scenario_names() {
  return {"exp1_flower", "exp1_2_cables", "exp2_traverse", "exp3_umbrella"};
}

ScenarioSpec builtin_scenario(const std::string& name) {
  ScenarioSpec spec;
  spec.name = name;
  spec.cable = {2.0, 0.0076};
  if (name == "exp1_flower") {
    spec.trajectory = FlowerTrajConfig{};
    spec.sim.duration = 30.0;
  } else if (name == "exp1_2_cables") {
    // Heavy plastic chain; hover so the tension compensation dominates.
    spec.cable.mass = 0.05639;
    spec.trajectory = ConstantTrajConfig{{0.0, 0.0, 0.4}, 0.0, 0.35};
    spec.sim.duration = 20.0;
  } else if (name == "exp2_traverse") {
    spec.trajectory = TraverseTrajConfig{};
    spec.sim.duration = 18.0;
  } else if (name == "exp3_umbrella") {
    WaypointTrajConfig w;
    w.waypoints = {{-1.6, -0.1, 0.6},
                   {0.0, -0.2, 0.6},
                   {0.6, 0.17, 0.509},
                   {0.8, 0.7, 1.0}};
    w.total_time = 20.0;
    w.psi = 0.0;
    w.s = 0.3;
    spec.trajectory = w;
    spec.sim.duration = 25.0;
  } else {
    throw UnknownScenario("unknown scenario '" + name + "'; built-ins: " +
                          [] {
                            std::string s;
                            for (const auto& n : builtin_scenario_names()) {
                              if (!s.empty()) s += ", ";
                              s += n;
                            }
                            return s;
                          }());
  }
  spec.vehicle = QuadrotorParams::defaults(spec.cable.mass);
  spec.gains = Gains::defaults_for_mass(spec.vehicle.mass);
  return spec;
}

SetpointTrajectory scenario_trajectory(const std::string& name) {
  return build_trajectory(builtin_scenario(name).trajectory);
}

RunTrace run_scenario(const ScenarioSpec& spec) {
  spec.validate();
  const SetpointTrajectory traj = build_trajectory(spec.trajectory);

  SimOptions opts;
  opts.k_taut = spec.k_taut;

  // Vehicles start at rest at the (possibly offset) t=0 references, upright
  // with the commanded yaw.
  CatenarySetpoint sp0 = traj(0.0);
  sp0.x_c += spec.start_offset;
  const auto [ref_a0, ref_b0] = setpoint_to_references(sp0, spec.cable);

  CoupledState state;
  state.cable = spec.cable;
  state.quad_a.x = ref_a0.x;
  state.quad_b.x = ref_b0.x;
  state.quad_a.R = rot_z(sp0.psi);
  state.quad_b.R = rot_z(sp0.psi);
  state.taut = (state.quad_b.x - state.quad_a.x).norm() >= spec.cable.length;

  QuadrotorController ctrl_a(spec.vehicle, spec.gains, spec.paper_gravity_sign);
  QuadrotorController ctrl_b(spec.vehicle, spec.gains, spec.paper_gravity_sign);

  RunTrace trace;
  trace.scenario = spec.name;
  trace.log_hz = spec.sim.log_hz;

  const double dt = spec.sim.dt;
  const long n_steps = static_cast<long>(std::ceil(spec.sim.duration / dt - 1e-9));
  const long n_logs = static_cast<long>(std::floor(spec.sim.duration * spec.sim.log_hz + 1e-9)) + 1;
  trace.rows.reserve(static_cast<std::size_t>(n_logs));

  ControlCommand cmd_a, cmd_b;
  long next_control = 0;  // control tick counter
  long next_log = 0;      // log sample counter
  const double control_period = 1.0 / spec.sim.control_hz;
  const double log_period = 1.0 / spec.sim.log_hz;

  // When the control period is an integer number of steps, schedule ticks by
  // step index: tick times then stay identical across dt refinements.
  const double steps_per_control = control_period / dt;
  const long control_stride = std::lround(steps_per_control);
  const bool control_aligned =
      control_stride >= 1 &&
      std::abs(steps_per_control - static_cast<double>(control_stride)) < 1e-9;

  // Sample-and-hold state measurements; ideal sensing reads the true state
  // at every controller tick.
  const bool ideal_sensing = spec.sim.sensing_hz <= 0.0;
  const double sensing_period =
      ideal_sensing ? 0.0 : 1.0 / spec.sim.sensing_hz;
  long next_sense = 0;
  CoupledState sensed = state;

  const auto measure = [&](double t) {
    TraceRow row;
    row.t = t;
    row.x_a = state.quad_a.x;
    row.x_b = state.quad_b.x;
    const CatenarySetpoint d = traj(t);
    row.x_c_d = d.x_c;
    row.psi_d = d.psi;
    row.span_d = d.s;
    bool chord_fallback = state.taut;
    if (!state.taut) {
      try {
        const LowestPoint lp = lowest_point_from_state(state, opts.solver_tol);
        row.x_c = lp.x_c;
        row.psi = d.psi + wrap_to_pi(lp.psi - d.psi);  // unwrap near desired
        row.span = lp.s_est;
      } catch (const Error&) {
        chord_fallback = true;
      }
    }
    if (chord_fallback) {
      // Taut or degenerate cable: report the straight-chord midpoint.
      const Eigen::Vector3d delta = state.quad_b.x - state.quad_a.x;
      row.x_c = 0.5 * (state.quad_a.x + state.quad_b.x);
      row.span = 0.5 * std::hypot(delta.x(), delta.y());
      const double psi_raw = std::atan2(-delta.x(), delta.y());
      row.psi = d.psi + wrap_to_pi(psi_raw - d.psi);
    }
    row.f_a = cmd_a.thrust;
    row.f_b = cmd_b.thrust;
    const EulerZyx ea = euler_zyx(state.quad_a.R);
    const EulerZyx eb = euler_zyx(state.quad_b.R);
    row.roll_a = ea.roll;
    row.pitch_a = ea.pitch;
    row.yaw_a = ea.yaw;
    row.roll_b = eb.roll;
    row.pitch_b = eb.pitch;
    row.yaw_b = eb.yaw;
    row.taut = state.taut;
    return row;
  };

  for (long i = 0; i <= n_steps; ++i) {
    const double t = static_cast<double>(i) * dt;

    // Measurement update.
    if (ideal_sensing) {
      sensed = state;
    } else if (t >= static_cast<double>(next_sense) * sensing_period - 1e-9) {
      sensed = state;
      ++next_sense;
    }

    // Controller tick (zero-order hold between ticks).
    const bool control_due =
        control_aligned
            ? (i % control_stride == 0)
            : (t >= static_cast<double>(next_control) * control_period - 1e-9);
    if (control_due) {
      const CatenarySetpoint sp = traj(t);
      const CatenarySolution sol = solve_catenary(
          spec.cable, sp.s, sp.s_dot, sp.s_ddot, opts.solver_tol);
      const auto [ref_a, ref_b] = setpoint_to_references(sp, sol);
      const Eigen::Matrix3d R_C = rot_z(sp.psi);

      Eigen::Vector3d tension_a = Eigen::Vector3d::Zero();
      Eigen::Vector3d tension_b = Eigen::Vector3d::Zero();
      if (spec.feedforward == FeedforwardMode::kCommanded) {
        const TensionPair tp = tension_pair(spec.cable, sol, spec.tension_mode,
                                            spec.vehicle.gravity);
        tension_a = tp.t_a;
        tension_b = tp.t_b;
      } else if (spec.feedforward == FeedforwardMode::kMeasured) {
        const auto [f_cable_a, f_cable_b] =
            cable_forces(sensed, opts, spec.vehicle.gravity);
        tension_a = R_C.transpose() * (-f_cable_a);
        tension_b = R_C.transpose() * (-f_cable_b);
      }
      cmd_a = ctrl_a.update(ref_a, sensed.quad_a, tension_a, R_C);
      cmd_b = ctrl_b.update(ref_b, sensed.quad_b, tension_b, R_C);
      ++next_control;
    }

    // Trace sample: first step at or past each log time.
    if (next_log < n_logs &&
        t >= static_cast<double>(next_log) * log_period - 1e-9) {
      trace.rows.push_back(measure(t));
      ++next_log;
    }

    if (i == n_steps) break;
    try {
      state = step(state, cmd_a, cmd_b, spec.vehicle, dt, opts);
    } catch (const NumericalDivergence&) {
      trace.diverged = true;
      break;
    }
  }

  trace.summary = compute_stats_or_empty(trace, spec.sim.stats_window_start);
  return trace;
}

}  // namespace catrobot
