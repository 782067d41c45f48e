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

#include <array>

#include "excirot/rosenzener.hpp"

namespace excirot {

struct PropagationSettings {
  // Integration spans +- window/sigma around the pulse center (sech tails
  // decay like e^-window).
  double window = 20.0;
  double rel_tol = 1e-10;
  // When set, the fine-structure splitting acts during the pulse instead of
  // being treated as frozen; quantifies the short-pulse idealization.
  bool include_splitting_during_pulse = false;
};

// Throws DomainError unless window >= 5 and rel_tol in [1e-14, 1e-6].
void validate(const PropagationSettings& s);

using Matrix3c = std::array<std::array<cplx, 3>, 3>;
using Matrix2c = std::array<std::array<cplx, 2>, 2>;

// H(t)/hbar in rad/ps over (uncoupled exciton, coupled exciton, biexciton):
// basis (|L>, |R>, |XX,+2>) for an R pulse, (|R>, |L>, |XX,-2>) for L.
// Rotating frame co-moving with the laser, so the detuning appears as a
// static biexciton energy -delta and the sech envelope is the only time
// dependence. The splitting block enters only when the settings flag is set.
Matrix3c hamiltonian(double t_ps, const DotParams& dot, const PulseParams& pulse,
                     const PropagationSettings& settings, double t_center_ps = 0.0);

// Integrates i dpsi/dt = (H/hbar) psi across the pulse with an adaptive
// Dormand-Prince 5(4) pair. Interaction-frame phases of the biexciton level
// are removed at entry and exit, so the result composes directly with
// apply_pulse. The uncoupled biexciton level rides along unchanged.
// Throws ToleranceError if step control cannot meet rel_tol, NormError if the
// state norm drifts by more than 1e-6.
FullState propagate(const FullState& s, const DotParams& dot, const PulseParams& pulse,
                    const PropagationSettings& settings);

// 2x2 map on (coupled exciton, biexciton) assembled by propagating the two
// coupled basis states; unitary to 1e-8 with the splitting flag off.
Matrix2c scattering_map(const PulseParams& pulse, const PropagationSettings& settings);

}  // namespace excirot
