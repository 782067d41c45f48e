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

#include <cmath>

namespace excirot {

// Reduced Planck constant in the unit system used throughout (micro-eV times ps).
inline constexpr double hbar_uev_ps = 658.2119569;

// Bandwidth hbar*sigma from the intensity-profile FWHM of a sech^2 pulse:
// intensity sech^2(sigma t) falls to half at t = arccosh(sqrt(2))/sigma.
// Never applied implicitly; callers must opt in.
inline double fwhm_to_bandwidth(double fwhm_ps) {
  return 2.0 * std::acosh(std::sqrt(2.0)) * hbar_uev_ps / fwhm_ps;
}

}  // namespace excirot
