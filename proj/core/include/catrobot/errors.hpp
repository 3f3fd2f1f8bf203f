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

#include <stdexcept>
#include <string>

namespace catrobot {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Endpoint separation at or beyond the cable length: no catenary exists.
class TautCable : public Error {
 public:
  using Error::Error;
};

// Geometry too degenerate to solve (e.g. horizontally coincident endpoints,
// vanishing linear coefficient in the derivative equations).
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

// Rank-deficient constraint system in the polynomial trajectory QP.
class SingularQP : public Error {
 public:
  using Error::Error;
};

// Simulation state left the sane range; signals controller blow-up.
class NumericalDivergence : public Error {
 public:
  using Error::Error;
};

// Unknown built-in scenario name.
class UnknownScenario : public Error {
 public:
  using Error::Error;
};

// Statistics window contains no samples.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

// File read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Unknown plot channel; the message lists the valid names.
class ChannelError : public Error {
 public:
  using Error::Error;
};

}  // namespace catrobot
