// Copyright 2026 the excirot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace excirot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Argument within tolerance of a pole of the Gamma function.
struct PoleError : Error {
  using Error::Error;
};

// The exciton subspace is (numerically) empty, so a rotation angle is undefined.
struct DegenerateError : Error {
  using Error::Error;
};

// The adaptive integrator could not meet the requested tolerance.
struct ToleranceError : Error {
  using Error::Error;
};

// State norm drifted beyond the allowed bound during propagation.
struct NormError : Error {
  using Error::Error;
};

struct NonConvergenceError : Error {
  using Error::Error;
};

// A normalization baseline was requested from a series without negative-delay points.
struct MissingBaselineError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Requested rotation angle exceeds what the pulse can reach; carries the bound.
struct InfeasibleError : Error {
  InfeasibleError(const std::string& msg, double theta_max_rad)
      : Error(msg), theta_max(theta_max_rad) {}
  double theta_max;
};

}  // namespace excirot
