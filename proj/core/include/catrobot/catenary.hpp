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

#include "catrobot/errors.hpp"

namespace catrobot {

inline constexpr double kDefaultGravity = 9.81;       // m/s^2
inline constexpr double kDefaultSolverTol = 1e-12;    // relative residual
inline constexpr double kMinHalfSpanFactor = 1e-4;    // s_min = factor * length

// A uniform, flexible, non-stretchable cable.
struct CableSpec {
  double length = 1.0;  // l > 0, meters
  double mass = 0.0;    // m_C >= 0, kilograms

  // Weight per unit length w = m_C * g / l  (force per meter).
  double weight_per_length(double gravity = kDefaultGravity) const {
    return mass * gravity / length;
  }
  void validate() const;
};

// Catenary curve parameter a and half-span s with their time derivatives.
// Satisfies the length constraint l/2 = a*sinh(s/a) and its first two time
// derivatives.
struct CatenarySolution {
  double a = 1.0;       // curve parameter, > 0, meters
  double s = 0.5;       // half-span, 0 < s < l/2, meters
  double a_dot = 0.0;   // m/s
  double a_ddot = 0.0;  // m/s^2
  double s_dot = 0.0;   // m/s
  double s_ddot = 0.0;  // m/s^2

  // Vertical drop from the endpoints to the lowest point: a(cosh(s/a) - 1).
  double sag() const;
};

// How the vertical tension component at the endpoints is computed.
//
// Classical catenary statics gives v = w*a*sinh(s/a) = w*l/2, the only choice
// that balances the total cable weight. The alternative w*z formula is kept
// as a literal-reproduction mode; it under-predicts the vertical component
// and does not balance the weight.
enum class TensionMode { kClassical, kPaper };

// Compensation tension at the two cable ends, in the catenary frame.
// t_a acts at the end attached at -s, t_b at +s. These are the forces a
// vehicle must add to hold its end; the cable pulls with the negation.
struct TensionPair {
  Eigen::Vector3d t_a;  // Newtons
  Eigen::Vector3d t_b;  // Newtons
};

// Result of the unequal-height (two-point) catenary solve.
struct TwoPointSolution {
  double a = 1.0;            // curve parameter
  double vertex_offset = 0;  // horizontal offset of the vertex from the
                             // endpoint midpoint, along the A->B direction
};

// Solves the length constraint l/2 = a*sinh(s/a) for a by bracketing
// bisection. Deterministic; the returned a satisfies
// |2a*sinh(s/a) - l| / l <= tol.
//
// Throws DomainError for non-positive or sub-minimal arguments and TautCable
// when s >= l/2.
double solve_a(double length, double half_span, double tol = kDefaultSolverTol);

// Time derivatives of the curve parameter given the span rate and
// acceleration. Once a is known the differentiated length constraints are
// linear in a_dot (resp. a_ddot), so both are isolated in closed form.
//
// Throws DegenerateGeometry if the linear coefficient sinh(s/a)-(s/a)cosh(s/a)
// has magnitude below 1e-12.
struct CurveParameterRates {
  double a_dot;
  double a_ddot;
};
CurveParameterRates solve_a_derivatives(double a, double s, double s_dot,
                                        double s_ddot);

// Convenience: solve a and its rates for a cable at (s, s_dot, s_ddot).
CatenarySolution solve_catenary(const CableSpec& cable, double s,
                                double s_dot = 0.0, double s_ddot = 0.0,
                                double tol = kDefaultSolverTol);

// Point of the catenary curve at arc parameter r in [-s, s], catenary frame:
// [0, r, a(cosh(r/a) - 1)].
Eigen::Vector3d curve_point(double a, double half_span, double r);

enum class Endpoint { kA, kB };

// Position, velocity and acceleration of one cable endpoint in the catenary
// frame. Endpoint A sits at arc parameter -s, endpoint B at +s; their
// y-components mirror while the z-components coincide.
struct EndpointKinematics {
  Eigen::Vector3d position;
  Eigen::Vector3d velocity;
  Eigen::Vector3d acceleration;
};
EndpointKinematics endpoint_kinematics(const CatenarySolution& sol,
                                       Endpoint which);

// Endpoint compensation tensions in the catenary frame.
// Horizontal components are [0, -w*a] at A and [0, +w*a] at B; the vertical
// component is w*l/2 in classical mode and w*sag in the literal mode.
TensionPair tension_pair(const CableSpec& cable, const CatenarySolution& sol,
                         TensionMode mode = TensionMode::kClassical,
                         double gravity = kDefaultGravity);

// General catenary between two supports with horizontal separation h and
// vertical offset v = z_B - z_A: solves sqrt(l^2 - v^2) = 2a*sinh(h/(2a)).
// Reduces exactly to solve_a for v = 0. The vertex offset is negative when
// v > 0 (vertex shifts toward the lower endpoint A).
//
// Throws TautCable when l^2 <= h^2 + v^2, DomainError for h <= 0 or l <= 0.
TwoPointSolution solve_two_point(double length, double horizontal_sep,
                                 double vertical_offset,
                                 double tol = kDefaultSolverTol);

}  // namespace catrobot
