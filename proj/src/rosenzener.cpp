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

#include "excirot/rosenzener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "excirot/constants.hpp"
#include "excirot/errors.hpp"
#include "excirot/specfun.hpp"

namespace excirot {

namespace {

constexpr double pi = std::numbers::pi;

// gamma = 1/2 - i delta/(2 sigma)
cplx gamma_param(const PulseParams& p) {
  return {0.5, -0.5 * p.detuning_uev / p.bandwidth_uev};
}

double delta_over_sigma(const PulseParams& p) { return p.detuning_uev / p.bandwidth_uev; }

}  // namespace

void validate(const PulseParams& p) {
  if (!(p.bandwidth_uev > 0.0) || !std::isfinite(p.bandwidth_uev)) {
    throw DomainError("PulseParams: bandwidth_uev must be positive");
  }
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) {
    throw DomainError("PulseParams: alpha must be >= 0");
  }
  if (!std::isfinite(p.detuning_uev)) {
    throw DomainError("PulseParams: detuning_uev must be finite");
  }
}

cplx survival_factor(const PulseParams& p) {
  validate(p);
  const cplx g = gamma_param(p);
  return specfun::gauss_2f1_unit(p.alpha, -p.alpha, g);
}

cplx transfer_factor(const PulseParams& p) {
  validate(p);
  if (p.alpha == 0.0) return {0.0, 0.0};
  const cplx g = gamma_param(p);
  const cplx f = specfun::gauss_2f1_unit(p.alpha + g, -p.alpha + g, 1.0 + g);
  return cplx(0.0, p.alpha) / g * f;
}

FullState apply_pulse(const FullState& s, const PulseParams& p) {
  const cplx f = survival_factor(p);
  const cplx t = transfer_factor(p);
  FullState out = s;
  if (p.pol == CircPolarization::R) {
    out.amp_r = f * s.amp_r;
    out.amp_xxp2 = s.amp_xxp2 + t * s.amp_r;
  } else {
    out.amp_l = f * s.amp_l;
    out.amp_xxm2 = s.amp_xxm2 + t * s.amp_l;
  }
  return out;
}

double pxx_peak(const PulseParams& p) {
  validate(p);
  const double u = 0.5 * pi * delta_over_sigma(p);
  const double sech = 1.0 / std::cosh(u);
  const double sn = std::sin(pi * p.alpha);
  return sech * sech * sn * sn;
}

double pxx_complement(const PulseParams& p) {
  validate(p);
  const double u = 0.5 * pi * delta_over_sigma(p);
  const double th = std::tanh(u);
  const double sech = 1.0 / std::cosh(u);
  const double cs = std::cos(pi * p.alpha);
  return th * th + sech * sech * cs * cs;
}

double pxx_closed_form(const PulseParams& p, const DotParams& dot, double tau_ps,
                       CircPolarization first_pol) {
  if (dot.splitting_uev < 0.0) {
    throw DomainError("pxx_closed_form: splitting_uev must be >= 0");
  }
  const double envelope = pxx_peak(p);
  const double phase = (dot.splitting_uev / hbar_uev_ps) * tau_ps;
  const double sign = (p.pol == first_pol) ? 1.0 : -1.0;
  return envelope * 0.5 * (1.0 + sign * std::cos(phase));
}

double dvh_amplitude(const PulseParams& p) {
  validate(p);
  const double y = 0.5 * delta_over_sigma(p);
  // Odd in the detuning, so the resonant value is exactly zero; returning it
  // directly also covers the Gamma pole at w - alpha for half-integer alpha.
  if (std::abs(y) <= specfun::pole_tol) return 0.0;
  const cplx w{0.5, y};
  const cplx val = std::exp(2.0 * specfun::ln_gamma(w) - specfun::ln_gamma(w + p.alpha) -
                            specfun::ln_gamma(w - p.alpha));
  return std::clamp(val.imag(), -1.0, 1.0);
}

double dvh_series(const PulseParams& p, const DotParams& dot, double tau_ps,
                  CircPolarization first_pol) {
  if (dot.splitting_uev < 0.0) {
    throw DomainError("dvh_series: splitting_uev must be >= 0");
  }
  const double phase = (dot.splitting_uev / hbar_uev_ps) * tau_ps;
  const double sign = (p.pol == first_pol) ? 1.0 : -1.0;
  return sign * dvh_amplitude(p) * std::sin(phase);
}

double rotation_angle(const PulseParams& p) {
  const double comp = pxx_complement(p);
  if (comp < 1e-12) {
    throw DegenerateError("rotation_angle: pulse empties the exciton subspace");
  }
  if (std::abs(0.5 * delta_over_sigma(p)) <= specfun::pole_tol) return 0.0;
  // asin(D / sqrt(1 - P0)) evaluated through the survival factor: by the Gauss
  // identity D = -Im F and sqrt(1 - P0) = |F|, so the angle is the phase of F
  // folded into [-pi/2, pi/2]. The phase stays well conditioned where the
  // arcsine quotient loses half its digits (|theta| near pi/2).
  const cplx f = survival_factor(p);
  const double phi = std::arg(f);
  if (phi > 0.5 * pi) return phi - pi;
  if (phi < -0.5 * pi) return phi + pi;
  return -phi;
}

}  // namespace excirot
