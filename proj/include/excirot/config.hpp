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

#include "excirot/designer.hpp"
#include "excirot/experiment.hpp"

namespace excirot {

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  // start, start+step, ... up to stop (inclusive within step*1e-9 slack).
  std::vector<double> points() const;
};

enum class PolarizationMode { co, cross, both };

// One parsed configuration file; commands pick the fields they need and
// reject configs missing them. Unknown keys anywhere are hard errors.
struct RunConfig {
  std::optional<double> splitting_uev;
  CircPolarization first_pol = CircPolarization::R;

  std::optional<double> alpha;
  std::optional<double> bandwidth_uev;
  std::optional<double> pulse_detuning_uev;
  std::optional<CircPolarization> pulse_pol;

  Method method = Method::analytic;
  PropagationSettings settings;

  std::optional<PolarizationMode> polarization;
  std::optional<GridSpec> delay_ps;
  std::optional<GridSpec> detuning_grid_uev;
  double tau_ps = 30.0;

  std::optional<DesignTarget> design;
};

// JSON with fixed schema; throws ConfigError with location diagnostics on
// parse failures, unknown keys, wrong types, or invalid values.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig parse_config_file(const std::string& path);

}  // namespace excirot
