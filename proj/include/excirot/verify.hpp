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

#include <functional>
#include <string>

#include "excirot/experiment.hpp"

namespace excirot {

struct VerifyOptions {
  PropagationSettings settings;
  double alpha_max = 1.5;
  double alpha_step = 0.1;
  double x_min = -3.0;   // detuning over bandwidth
  double x_max = 3.0;
  double x_step = 0.25;
  double bandwidth_uev = 145.0;
};

struct VerifyReport {
  double max_amp_diff = 0.0;
  double max_unitarity_defect = 0.0;
  double max_norm_drift = 0.0;
  int points = 0;
  double elapsed_s = 0.0;
  bool pass = false;
  std::string summary() const;
};

using AnalyticMap = std::function<FullState(const FullState&, const PulseParams&)>;

// Cross-checks the closed-form pulse map against the numerical propagator on a
// grid of (alpha, detuning/bandwidth): amplitude agreement < 1e-6, closed-form
// unitarity defect < 1e-10, propagator norm drift < 1e-9. The analytic map is
// injectable so tests can prove the check trips on a corrupted implementation;
// the default is apply_pulse.
VerifyReport run_oracle_grid(const VerifyOptions& opts, const AnalyticMap& analytic = {});

}  // namespace excirot
