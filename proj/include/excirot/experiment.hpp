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

#include <optional>
#include <string>
#include <vector>

#include "excirot/propagator.hpp"

namespace excirot {

enum class Method { analytic, numeric };

// One pump-probe shot: first pulse creates a circular exciton, the spin
// precesses for tau, then the control pulse acts.
struct ExperimentConfig {
  DotParams dot;
  CircPolarization first_pol = CircPolarization::R;
  PulseParams pulse;
  Method method = Method::analytic;
  PropagationSettings settings;
};

struct Observables {
  double p_xx = 0.0;
  double i_h = 0.0;
  double i_v = 0.0;
  double d_vh = 0.0;
  // Rotation angle of the control pulse; empty when the exciton subspace is
  // (numerically) emptied by the pulse.
  std::optional<double> theta_rad;
};

struct SweepPoint {
  double x = 0.0;
  Observables obs;
};

struct SweepResult {
  std::string variable_name;
  std::vector<SweepPoint> points;
};

// Time-integrated photoluminescence proxy. Every biexciton decays through one
// intermediate exciton that lands in |H> or |V> with equal weight, so
// i_h = |<H|psi>|^2 + p_xx/2 and i_v = |<V|psi>|^2 + p_xx/2; the feed term
// cancels from i_v - i_h.
void pl_intensities(const FullState& s, double& i_h, double& i_v, double& p_xx);

// Observables after precessing for tau and applying the control pulse via the
// chosen method. Negative tau means the control pulse arrives before the
// exciton exists and is a no-op.
Observables run_single(const ExperimentConfig& config, double tau_ps);

// Rescales d_vh by the mean of (i_v + i_h) over negative-delay points.
// Throws MissingBaselineError when the series has no such points.
SweepResult normalized_difference(const SweepResult& series);

SweepResult sweep_delay(const ExperimentConfig& config,
                        const std::vector<double>& tau_grid_ps);

// Varies the control-pulse detuning at fixed delay.
SweepResult sweep_detuning(const ExperimentConfig& config,
                           const std::vector<double>& detuning_grid_uev,
                           double tau_ps);

}  // namespace excirot
