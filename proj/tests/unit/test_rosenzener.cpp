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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "excirot/constants.hpp"
#include "excirot/errors.hpp"
#include "excirot/rosenzener.hpp"

using namespace excirot;

namespace {

constexpr double pi = std::numbers::pi;

// The reference working point used throughout: 0.7pi pulse, 145 ueV bandwidth,
// 63 ueV below resonance, 34 ueV splitting.
const PulseParams ref_pulse{0.35, 145.0, -63.0, CircPolarization::R};
const DotParams ref_dot{34.0};

PulseParams at(double alpha, double x, CircPolarization pol = CircPolarization::R) {
  return {alpha, 145.0, x * 145.0, pol};
}

}  // namespace

TEST_CASE("survival_factor special values") {
  CHECK(std::abs(survival_factor(at(0.0, 0.7)) - cplx(1.0)) < 1e-12);
  // resonant pi pulse: full transfer, nothing survives
  const cplx zero = survival_factor(at(0.5, 0.0));
  CHECK(zero == cplx(0.0, 0.0));
  // exact algebra: F = (gamma-1)/gamma = -i at alpha = 1, delta/sigma = 1
  CHECK(std::abs(survival_factor(at(1.0, 1.0)) - cplx(0.0, -1.0)) < 1e-12);
  // reference point, frozen from an independent evaluation
  const cplx f = survival_factor(ref_pulse);
  CHECK(std::abs(f - cplx(0.63638135233589552, 0.28358744256859101)) < 1e-12);
}

TEST_CASE("transfer_factor matches the sinh/cosh closed form") {
  CHECK(transfer_factor(at(0.0, 1.3)) == cplx(0.0, 0.0));
  CHECK(std::abs(transfer_factor(at(0.5, 0.0)) - cplx(0.0, 1.0)) < 1e-12);
  for (double alpha = 0.0; alpha <= 1.5 + 1e-12; alpha += 0.25) {
    for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.75) {
      const cplx got = transfer_factor(at(alpha, x));
      const cplx want{0.0, std::sin(pi * alpha) / std::cosh(0.5 * pi * x)};
      CHECK(std::abs(got - want) < 1e-10);
    }
  }
}

TEST_CASE("unitarity of the pulse map factors") {
  for (double alpha = 0.0; alpha <= 1.5 + 1e-12; alpha += 0.1) {
    for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.25) {
      const PulseParams p = at(alpha, x);
      const double sum = std::norm(survival_factor(p)) + std::norm(transfer_factor(p));
      CHECK(std::abs(sum - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("alpha = 1 is a pure rotation: |F| = 1 for every detuning") {
  for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.2) {
    CHECK(std::abs(std::abs(survival_factor(at(1.0, x))) - 1.0) < 1e-10);
  }
}

TEST_CASE("apply_pulse leaves the uncoupled component untouched") {
  const FullState l = init_exciton(CircPolarization::L);
  const FullState out = apply_pulse(l, at(0.77, -1.1));
  CHECK(out.amp_l == cplx(1.0));
  CHECK(out.amp_r == cplx(0.0));
  CHECK(out.amp_xxm2 == cplx(0.0));
  CHECK(out.amp_xxp2 == cplx(0.0));
}

TEST_CASE("apply_pulse full population transfer at the resonant pi pulse") {
  const FullState out = apply_pulse(init_exciton(CircPolarization::R), at(0.5, 0.0));
  CHECK(std::abs(std::norm(out.amp_xxp2) - 1.0) < 1e-12);
  CHECK(std::abs(out.amp_r) < 1e-12);
}

TEST_CASE("apply_pulse reproduces the closed-form state term by term") {
  const FullState pre = precess(init_exciton(CircPolarization::R), ref_dot, 42.0);
  const FullState post = apply_pulse(pre, ref_pulse);
  CHECK(std::abs(post.amp_l - pre.amp_l) < 1e-14);
  CHECK(std::abs(post.amp_r - survival_factor(ref_pulse) * pre.amp_r) < 1e-14);
  CHECK(std::abs(post.amp_xxp2 - transfer_factor(ref_pulse) * pre.amp_r) < 1e-14);
  CHECK(post.amp_xxm2 == cplx(0.0));
}

TEST_CASE("apply_pulse preserves the norm") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    FullState s;
    s.amp_l = {uni(rng), uni(rng)};
    s.amp_r = {uni(rng), uni(rng)};
    const double norm = std::sqrt(s.norm2());
    s.amp_l /= norm;
    s.amp_r /= norm;
    const PulseParams p = at(std::abs(uni(rng)) * 1.5, uni(rng) * 3.0,
                             uni(rng) > 0 ? CircPolarization::R : CircPolarization::L);
    CHECK(std::abs(apply_pulse(s, p).norm2() - 1.0) < 1e-9);
  }
}

TEST_CASE("pxx_peak and pxx_complement are complementary") {
  for (double alpha = 0.0; alpha <= 1.5 + 1e-12; alpha += 0.17) {
    for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.6) {
      const PulseParams p = at(alpha, x);
      CHECK(std::abs(pxx_peak(p) + pxx_complement(p) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("pxx_closed_form fixed points") {
  CHECK(pxx_closed_form(at(0.5, 0.0), ref_dot, 0.0, CircPolarization::R) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double period = 2.0 * pi * hbar_uev_ps / ref_dot.splitting_uev;
  CHECK(std::abs(pxx_closed_form(at(0.5, 0.0), ref_dot, 0.5 * period,
                                 CircPolarization::R)) < 1e-9);
  // reference point at zero delay, frozen from direct arithmetic
  CHECK(std::abs(pxx_closed_form(ref_pulse, ref_dot, 0.0, CircPolarization::R) -
                 0.5145969368165414) < 1e-10);
}

TEST_CASE("pxx_closed_form equals the amplitude-level population") {
  for (double alpha : {0.2, 0.35, 0.5, 1.0}) {
    for (double x : {-0.8, 0.0, 1.7}) {
      for (double tau : {0.0, 12.0, 31.4, 77.0}) {
        const FullState pre = precess(init_exciton(CircPolarization::R), ref_dot, tau);
        const PulseParams co = at(alpha, x, CircPolarization::R);
        const PulseParams cross = at(alpha, x, CircPolarization::L);
        CHECK(std::abs(std::norm(apply_pulse(pre, co).amp_xxp2) -
                       pxx_closed_form(co, ref_dot, tau, CircPolarization::R)) < 1e-10);
        CHECK(std::abs(std::norm(apply_pulse(pre, cross).amp_xxm2) -
                       pxx_closed_form(cross, ref_dot, tau, CircPolarization::R)) <
              1e-10);
      }
    }
  }
}

TEST_CASE("dvh_amplitude special values and parity") {
  CHECK(dvh_amplitude(at(0.35, 0.0)) == 0.0);
  CHECK(std::abs(dvh_amplitude(at(1.0, 1.0)) - 1.0) < 1e-12);
  // below resonance the amplitude is negative
  const double ref = dvh_amplitude(ref_pulse);
  CHECK(ref < 0.0);
  CHECK(std::abs(ref - (-0.28358744256859103)) < 1e-9);
  for (double alpha : {0.2, 0.35, 0.8, 1.3}) {
    for (double x = 0.1; x <= 3.0; x += 0.3) {
      CHECK(std::abs(dvh_amplitude(at(alpha, x)) + dvh_amplitude(at(alpha, -x))) <
            1e-10);
    }
  }
}

TEST_CASE("dvh_series phase and polarization symmetry") {
  CHECK(dvh_series(ref_pulse, ref_dot, 0.0, CircPolarization::R) == 0.0);
  const double period = 2.0 * pi * hbar_uev_ps / ref_dot.splitting_uev;
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(dvh_series(ref_pulse, ref_dot, 0.5 * n * period,
                              CircPolarization::R)) < 1e-12);
  }
  PulseParams cross = ref_pulse;
  cross.pol = CircPolarization::L;
  for (double tau : {7.0, 42.0, 100.0}) {
    CHECK(dvh_series(ref_pulse, ref_dot, tau, CircPolarization::R) ==
          doctest::Approx(-dvh_series(cross, ref_dot, tau, CircPolarization::R))
              .epsilon(1e-12));
  }
}

TEST_CASE("dvh_series equals the amplitude-level eigenstate difference") {
  for (double tau : {5.0, 30.0, 61.0, 133.0}) {
    const FullState pre = precess(init_exciton(CircPolarization::R), ref_dot, tau);
    const FullState post = apply_pulse(pre, ref_pulse);
    // i_v - i_h of the raw amplitudes, biexciton feed excluded
    const double z = bloch_vector(post).z;
    CHECK(std::abs(z - dvh_series(ref_pulse, ref_dot, tau, CircPolarization::R)) <
          1e-10);
  }
}

TEST_CASE("rotation_angle fixed points and errors") {
  CHECK(rotation_angle(at(0.35, 0.0)) == 0.0);
  CHECK(std::abs(rotation_angle(at(1.0, 1.0)) - 0.5 * pi) < 1e-12);
  CHECK(std::abs(rotation_angle(ref_pulse) - (-0.41920972544914603)) < 1e-9);
  CHECK_THROWS_AS(rotation_angle(at(0.5, 0.0)), DegenerateError);
  for (double x = 0.2; x <= 3.0; x += 0.4) {
    CHECK(std::abs(rotation_angle(at(0.35, x)) + rotation_angle(at(0.35, -x))) < 1e-10);
  }
}

TEST_CASE("pulse parameter validation") {
  CHECK_THROWS_AS(survival_factor(PulseParams{-0.1, 145.0, 0.0, CircPolarization::R}),
                  DomainError);
  CHECK_THROWS_AS(survival_factor(PulseParams{0.5, 0.0, 0.0, CircPolarization::R}),
                  DomainError);
  CHECK_THROWS_AS(survival_factor(PulseParams{0.5, -3.0, 0.0, CircPolarization::R}),
                  DomainError);
}
