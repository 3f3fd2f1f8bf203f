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

#include "catrobot/catenary.hpp"

#include <cmath>
#include <string>

#include "catrobot/math_utils.hpp"

namespace catrobot {
namespace {

constexpr double kDegenerateCoefficient = 1e-12;

// Residual of the length constraint: 2a*sinh(s/a) - l, strictly decreasing
// in a. Overflows to +inf for tiny a, which keeps its sign usable.
double length_residual(double a, double s, double length) {
  return 2.0 * a * std::sinh(s / a) - length;
}

}  // namespace

void CableSpec::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("cable length must be positive and finite");
  }
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw DomainError("cable mass must be non-negative and finite");
  }
}

double CatenarySolution::sag() const { return cosh_sag(a, s); }

double solve_a(double length, double half_span, double tol) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("solve_a: cable length must be positive");
  }
  if (!(half_span > 0.0) || !std::isfinite(half_span)) {
    throw DomainError("solve_a: half-span must be positive");
  }
  if (half_span < kMinHalfSpanFactor * length) {
    throw DomainError("solve_a: half-span below s_min = 1e-4 * length; the "
                      "curve degenerates toward a doubled vertical cable");
  }
  if (half_span >= 0.5 * length) {
    throw TautCable("solve_a: half-span >= length/2, no finite curve "
                    "parameter exists");
  }
  if (!(tol > 0.0)) {
    throw DomainError("solve_a: tolerance must be positive");
  }

  // Bracket: residual is +inf-ish at a_lo and negative for large a
  // (2a*sinh(s/a) -> 2s < l). Expand the top by doubling as a guard.
  double lo = 1e-9 * half_span;
  double hi = 1e6 * half_span;
  while (length_residual(hi, half_span, length) > 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      throw DomainError("solve_a: failed to bracket the root");
    }
  }

  // Bisect to a relative interval at least as tight as the requested
  // residual tolerance; the residual check below is the actual contract.
  const double width_tol = std::min(tol, 1e-13);
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 1000; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval at machine resolution
    const double r = length_residual(mid, half_span, length);
    if (r == 0.0) return mid;
    if (r > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if ((hi - lo) <= width_tol * lo) break;
  }
  mid = 0.5 * (lo + hi);
  if (std::abs(length_residual(mid, half_span, length)) > tol * length) {
    throw DomainError("solve_a: bisection failed to reach tolerance " +
                      std::to_string(tol));
  }
  return mid;
}

CurveParameterRates solve_a_derivatives(double a, double s, double s_dot,
                                        double s_ddot) {
  if (!(a > 0.0) || !(s > 0.0)) {
    throw DomainError("solve_a_derivatives: requires a > 0 and s > 0");
  }
  const double x = s / a;
  const double sh = std::sinh(x);
  const double ch = std::cosh(x);
  // Coefficient of a_dot (and of a_ddot) in the differentiated length
  // constraints; strictly negative for x > 0.
  const double coef = sinh_minus_x_cosh(x);
  if (std::abs(coef) < kDegenerateCoefficient) {
    throw DegenerateGeometry(
        "solve_a_derivatives: linear coefficient sinh(s/a) - (s/a)cosh(s/a) "
        "is below 1e-12");
  }

  CurveParameterRates out;
  // First derivative of l/2 = a*sinh(s/a):
  //   0 = a_dot*sinh(x) + (s_dot - x*a_dot)*cosh(x)
  out.a_dot = -s_dot * ch / coef;

  // Second derivative, with u = d(s/a)/dt and u_dot0 = du/dt minus its
  // a_ddot term (the a_ddot part moves into the linear coefficient):
  //   0 = a*u^2*sinh + 2*a_dot*u*cosh + a*u_dot*cosh + a_ddot*sinh
  const double u = (s_dot - x * out.a_dot) / a;
  const double u_dot0 = s_ddot / a - 2.0 * s_dot * out.a_dot / (a * a) +
                        2.0 * s * out.a_dot * out.a_dot / (a * a * a);
  const double known = a * u * u * sh + 2.0 * out.a_dot * u * ch +
                       a * u_dot0 * ch;
  out.a_ddot = -known / coef;
  return out;
}

CatenarySolution solve_catenary(const CableSpec& cable, double s, double s_dot,
                                double s_ddot, double tol) {
  cable.validate();
  CatenarySolution sol;
  sol.s = s;
  sol.s_dot = s_dot;
  sol.s_ddot = s_ddot;
  sol.a = solve_a(cable.length, s, tol);
  const CurveParameterRates rates = solve_a_derivatives(sol.a, s, s_dot, s_ddot);
  sol.a_dot = rates.a_dot;
  sol.a_ddot = rates.a_ddot;
  return sol;
}

Eigen::Vector3d curve_point(double a, double half_span, double r) {
  if (!(a > 0.0)) {
    throw DomainError("curve_point: curve parameter must be positive");
  }
  // Tiny relative slack so the endpoints survive roundoff.
  if (std::abs(r) > half_span * (1.0 + 1e-12)) {
    throw DomainError("curve_point: arc parameter outside [-s, s]");
  }
  return {0.0, r, cosh_sag(a, r)};
}

EndpointKinematics endpoint_kinematics(const CatenarySolution& sol,
                                       Endpoint which) {
  const double a = sol.a;
  const double x = sol.s / a;
  const double sh = std::sinh(x);
  const double ch = std::cosh(x);
  const double sh_half = std::sinh(0.5 * x);
  const double ch_m1 = 2.0 * sh_half * sh_half;  // cosh(x) - 1, no cancellation
  const double sign = (which == Endpoint::kA) ? -1.0 : 1.0;

  // u = d(s/a)/dt and its time derivative.
  const double u = (sol.s_dot - x * sol.a_dot) / a;
  const double u_dot = sol.s_ddot / a - 2.0 * sol.s_dot * sol.a_dot / (a * a) -
                       sol.s * sol.a_ddot / (a * a) +
                       2.0 * sol.s * sol.a_dot * sol.a_dot / (a * a * a);

  EndpointKinematics out;
  out.position = {0.0, sign * sol.s, cosh_sag(a, sol.s)};
  out.velocity = {0.0, sign * sol.s_dot, sol.a_dot * ch_m1 + a * u * sh};
  out.acceleration = {0.0, sign * sol.s_ddot,
                      sol.a_ddot * ch_m1 + 2.0 * sol.a_dot * u * sh +
                          a * u * u * ch + a * u_dot * sh};
  return out;
}

TensionPair tension_pair(const CableSpec& cable, const CatenarySolution& sol,
                         TensionMode mode, double gravity) {
  cable.validate();
  const double w = cable.weight_per_length(gravity);
  const double horizontal = w * sol.a;
  const double vertical = (mode == TensionMode::kClassical)
                              ? w * sol.a * std::sinh(sol.s / sol.a)
                              : w * sol.sag();
  TensionPair out;
  out.t_a = {0.0, -horizontal, vertical};
  out.t_b = {0.0, horizontal, vertical};
  return out;
}

TwoPointSolution solve_two_point(double length, double horizontal_sep,
                                 double vertical_offset, double tol) {
  if (!(length > 0.0)) {
    throw DomainError("solve_two_point: cable length must be positive");
  }
  if (!(horizontal_sep > 0.0)) {
    throw DomainError("solve_two_point: horizontal separation must be "
                      "positive");
  }
  const double chord_sq = horizontal_sep * horizontal_sep +
                          vertical_offset * vertical_offset;
  if (length * length <= chord_sq) {
    throw TautCable("solve_two_point: endpoint separation at or beyond the "
                    "cable length");
  }
  // Reduce to the symmetric problem with effective length sqrt(l^2 - v^2).
  const double effective_length =
      std::sqrt(length * length - vertical_offset * vertical_offset);
  TwoPointSolution out;
  out.a = solve_a(effective_length, 0.5 * horizontal_sep, tol);
  out.vertex_offset =
      -out.a * std::asinh(vertical_offset / effective_length);
  return out;
}

}  // namespace catrobot
