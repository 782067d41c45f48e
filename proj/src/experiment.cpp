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

#include "excirot/experiment.hpp"

#include <cmath>

#include "excirot/constants.hpp"
#include "excirot/errors.hpp"

namespace excirot {

namespace {

void require_increasing(const std::vector<double>& grid, const char* what) {
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

std::optional<double> theta_or_empty(const PulseParams& pulse) {
  try {
    return rotation_angle(pulse);
  } catch (const DegenerateError&) {
    return std::nullopt;
  }
}

Observables assemble(const FullState& state, const PulseParams& pulse) {
  Observables obs;
  pl_intensities(state, obs.i_h, obs.i_v, obs.p_xx);
  obs.d_vh = obs.i_v - obs.i_h;
  obs.theta_rad = theta_or_empty(pulse);
  return obs;
}

}  // namespace

void pl_intensities(const FullState& s, double& i_h, double& i_v, double& p_xx) {
  p_xx = std::norm(s.amp_xxm2) + std::norm(s.amp_xxp2);
  const LinearAmps lin = to_linear(s);
  i_h = std::norm(lin.amp_h) + 0.5 * p_xx;
  i_v = std::norm(lin.amp_v) + 0.5 * p_xx;
}

Observables run_single(const ExperimentConfig& config, double tau_ps) {
  validate(config.pulse);
  const FullState start = init_exciton(config.first_pol);
  if (tau_ps < 0.0) {
    // The control pulse arrives before the exciton exists; nothing happens to
    // the precessing state.
    return assemble(precess(start, config.dot, tau_ps), config.pulse);
  }
  FullState state;
  if (config.method == Method::analytic) {
    state = apply_pulse(precess(start, config.dot, tau_ps), config.pulse);
  } else {
    validate(config.settings);
    if (config.settings.include_splitting_during_pulse) {
      // Center the sech at t = tau: precess up to the window entry, integrate
      // across the window (the splitting acts inside), then rewind the exit
      // half-window so both methods report the state at the common origin tau.
      const double half_window_ps =
          config.settings.window * hbar_uev_ps / config.pulse.bandwidth_uev;
      state = precess(start, config.dot, tau_ps - half_window_ps);
      state = propagate(state, config.dot, config.pulse, config.settings);
      state = precess(state, config.dot, -half_window_ps);
    } else {
      state = propagate(precess(start, config.dot, tau_ps), config.dot, config.pulse,
                        config.settings);
    }
  }
  return assemble(state, config.pulse);
}

SweepResult normalized_difference(const SweepResult& series) {
  double sum = 0.0;
  int n = 0;
  for (const auto& pt : series.points) {
    if (pt.x < 0.0) {
      sum += pt.obs.i_v + pt.obs.i_h;
      ++n;
    }
  }
  if (n == 0) {
    throw MissingBaselineError(
        "normalized_difference: series has no negative-delay points");
  }
  const double baseline = sum / n;
  SweepResult out = series;
  for (auto& pt : out.points) {
    pt.obs.d_vh = (pt.obs.i_v - pt.obs.i_h) / baseline;
  }
  return out;
}

SweepResult sweep_delay(const ExperimentConfig& config,
                        const std::vector<double>& tau_grid_ps) {
  require_increasing(tau_grid_ps, "sweep_delay");
  SweepResult result;
  result.variable_name = "tau_ps";
  result.points.reserve(tau_grid_ps.size());
  for (double tau : tau_grid_ps) {
    result.points.push_back({tau, run_single(config, tau)});
  }
  return result;
}

SweepResult sweep_detuning(const ExperimentConfig& config,
                           const std::vector<double>& detuning_grid_uev, double tau_ps) {
  require_increasing(detuning_grid_uev, "sweep_detuning");
  SweepResult result;
  result.variable_name = "delta_ueV";
  result.points.reserve(detuning_grid_uev.size());
  ExperimentConfig local = config;
  for (double detuning : detuning_grid_uev) {
    local.pulse.detuning_uev = detuning;
    result.points.push_back({detuning, run_single(local, tau_ps)});
  }
  return result;
}

}  // namespace excirot
