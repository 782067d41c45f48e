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

#include "excirot/rosenzener.hpp"

namespace excirot {

enum class SignPreference { positive_detuning, negative_detuning };

struct DesignTarget {
  double theta_rad = 0.0;
  double alpha = 0.0;
  double bandwidth_uev = 0.0;
  // Which detuning sign to try first; overridden when only one sign can
  // produce the requested angle (the angle is odd in the detuning).
  SignPreference sign_preference = SignPreference::positive_detuning;
};

struct DesignResult {
  double detuning_uev = 0.0;
  double achieved_theta = 0.0;
  double residual_p_xx = 0.0;
  int iterations = 0;
};

struct MaxRotation {
  double theta_max = 0.0;
  double delta_star_uev = 0.0;
};

// Maximum rotation angle over positive detunings, located by a dense scan of
// delta/sigma in (0, 10] followed by golden-section refinement to 1e-10.
MaxRotation max_rotation_angle(double alpha, double bandwidth_uev);

// Solves rotation_angle(pulse) = theta_rad for the detuning at fixed alpha and
// bandwidth by bracketed bisection, scanning outward from zero detuning so the
// smallest-|delta| solution is returned. Throws InfeasibleError (carrying
// theta_max) when |theta_rad| exceeds the reachable maximum, and
// NonConvergenceError after 200 bisection iterations.
DesignResult design_detuning(const DesignTarget& target);

}  // namespace excirot
