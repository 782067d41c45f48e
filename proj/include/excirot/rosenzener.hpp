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

#include "excirot/core.hpp"

namespace excirot {

// One hyperbolic-secant control pulse. alpha = Omega/sigma is the Rabi ratio
// (pulse area 2*pi*alpha, so alpha = 0.5 is a pi pulse), bandwidth_uev is
// hbar*sigma, detuning_uev is hbar*(omega - omega0).
struct PulseParams {
  double alpha = 0.0;
  double bandwidth_uev = 0.0;
  double detuning_uev = 0.0;
  CircPolarization pol = CircPolarization::R;
};

// Throws DomainError unless alpha >= 0 and bandwidth_uev > 0.
void validate(const PulseParams& p);

// Factor multiplying the coupled circular amplitude after the pulse:
// F(alpha, -alpha; gamma; 1) with gamma = 1/2 - i delta/(2 sigma).
cplx survival_factor(const PulseParams& p);

// Factor mapping the coupled circular amplitude onto the biexciton:
// (i alpha / gamma) F(alpha + gamma, -alpha + gamma; 1 + gamma; 1).
// Equals i sin(pi alpha) / cosh(pi delta / (2 sigma)) in closed form.
cplx transfer_factor(const PulseParams& p);

// Post-pulse state: the pulse couples one circular component to one biexciton
// level (R to |XX,+2>, L to |XX,-2>); the other circular component is untouched.
FullState apply_pulse(const FullState& s, const PulseParams& p);

// Peak biexciton transfer probability sech^2(pi delta/(2 sigma)) sin^2(pi alpha).
double pxx_peak(const PulseParams& p);

// 1 - pxx_peak evaluated without cancellation:
// tanh^2(u) + sech^2(u) cos^2(pi alpha), u = pi delta/(2 sigma).
double pxx_complement(const PulseParams& p);

// Biexciton population after a pulse at delay tau: the pxx_peak envelope times
// [1 +- cos(Delta tau)]/2 (+ for co-polarized pulses, - for cross-polarized).
double pxx_closed_form(const PulseParams& p, const DotParams& dot, double tau_ps,
                       CircPolarization first_pol);

// Oscillation amplitude of the eigenstate-intensity difference:
// Im[Gamma^2(w) / (Gamma(w + alpha) Gamma(w - alpha))], w = 1/2 + i delta/(2 sigma).
// Odd in the detuning; exactly 0 on resonance.
double dvh_amplitude(const PulseParams& p);

// Eigenstate-intensity difference at delay tau: +dvh_amplitude * sin(Delta tau)
// for co-polarized pulses, negated for cross-polarized.
double dvh_series(const PulseParams& p, const DotParams& dot, double tau_ps,
                  CircPolarization first_pol);

// Spin rotation angle about the circular axis:
// theta = arcsin(dvh_amplitude / sqrt(1 - pxx_peak)), in [-pi/2, pi/2],
// evaluated as the folded phase of survival_factor (the two agree exactly;
// the phase form keeps full precision near |theta| = pi/2).
// Throws DegenerateError when 1 - pxx_peak < 1e-12 (empty exciton subspace).
double rotation_angle(const PulseParams& p);

}  // namespace excirot
