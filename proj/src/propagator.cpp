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

#include "excirot/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "excirot/constants.hpp"
#include "excirot/errors.hpp"

namespace excirot {

namespace {

using Vec3 = std::array<cplx, 3>;

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, for the embedded 4th-order error estimate.
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

Vec3 axpy(const Vec3& y, double h, std::initializer_list<std::pair<double, const Vec3*>> terms) {
  Vec3 out = y;
  for (const auto& [w, k] : terms) {
    for (int i = 0; i < 3; ++i) out[i] += h * w * (*k)[i];
  }
  return out;
}

double norm3(const Vec3& y) {
  return std::sqrt(std::norm(y[0]) + std::norm(y[1]) + std::norm(y[2]));
}

// Adaptive integration of dy/du = f(u, y) over [u0, u1].
template <typename F>
Vec3 integrate(const F& f, Vec3 y, double u0, double u1, double rel_tol) {
  const double atol = 1e-2 * rel_tol;
  const double span = u1 - u0;
  double u = u0;
  double h = std::min(0.1, span);
  Vec3 k1 = f(u, y);
  long steps = 0;
  while (u < u1 - 1e-14 * span) {
    if (++steps > 2000000) {
      throw ToleranceError("propagate: step limit exceeded");
    }
    if (h < 1e-12) {
      throw ToleranceError("propagate: step size underflow");
    }
    h = std::min(h, u1 - u);
    const Vec3 k2 = f(u + c2 * h, axpy(y, h, {{a21, &k1}}));
    const Vec3 k3 = f(u + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const Vec3 k4 = f(u + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const Vec3 k5 =
        f(u + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const Vec3 k6 = f(
        u + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const Vec3 y5 =
        axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const Vec3 k7 = f(u + h, y5);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
      const cplx ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                           e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      const double r = std::abs(ei) / sc;
      err += r * r;
    }
    err = std::sqrt(err / 3.0);
    if (err <= 1.0) {
      u += h;
      y = y5;
      k1 = k7;
      const double grow = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
  }
  return y;
}

}  // namespace

void validate(const PropagationSettings& s) {
  if (!(s.window >= 5.0) || !std::isfinite(s.window)) {
    throw DomainError("PropagationSettings: window must be >= 5");
  }
  if (!(s.rel_tol >= 1e-14) || !(s.rel_tol <= 1e-6)) {
    throw DomainError("PropagationSettings: rel_tol must lie in [1e-14, 1e-6]");
  }
}

Matrix3c hamiltonian(double t_ps, const DotParams& dot, const PulseParams& pulse,
                     const PropagationSettings& settings, double t_center_ps) {
  validate(pulse);
  if (dot.splitting_uev < 0.0) {
    throw DomainError("hamiltonian: splitting_uev must be >= 0");
  }
  const double sigma = pulse.bandwidth_uev / hbar_uev_ps;     // rad/ps
  const double delta = pulse.detuning_uev / hbar_uev_ps;      // rad/ps
  const double split = settings.include_splitting_during_pulse
                           ? dot.splitting_uev / hbar_uev_ps
                           : 0.0;
  const double rabi = pulse.alpha * sigma;
  const double coupling = -rabi / std::cosh(sigma * (t_ps - t_center_ps));
  Matrix3c h{};
  h[0][1] = h[1][0] = 0.5 * split;
  h[1][2] = h[2][1] = coupling;
  h[2][2] = -delta;
  return h;
}

FullState propagate(const FullState& s, const DotParams& dot, const PulseParams& pulse,
                    const PropagationSettings& settings) {
  validate(settings);
  validate(pulse);
  const double sigma = pulse.bandwidth_uev / hbar_uev_ps;
  const double w = settings.window;
  const double x = pulse.detuning_uev / pulse.bandwidth_uev;
  const bool pol_r = pulse.pol == CircPolarization::R;

  Vec3 y{pol_r ? s.amp_l : s.amp_r, pol_r ? s.amp_r : s.amp_l,
         pol_r ? s.amp_xxp2 : s.amp_xxm2};
  const double norm_in = norm3(y);
  // Biexciton amplitude enters and leaves in the interaction frame, where it
  // is constant whenever the pulse is off; this strips the trivial e^{i delta t}
  // phase and makes the result comparable to the closed-form map.
  y[2] *= std::exp(cplx(0.0, -x * w));

  const auto f = [&](double u, const Vec3& v) -> Vec3 {
    const Matrix3c h = hamiltonian(u / sigma, dot, pulse, settings);
    Vec3 out;
    const cplx mi{0.0, -1.0};
    for (int r = 0; r < 3; ++r) {
      cplx acc{};
      for (int c = 0; c < 3; ++c) acc += h[r][c] * v[c];
      out[r] = mi * acc / sigma;
    }
    return out;
  };
  y = integrate(f, y, -w, w, settings.rel_tol);

  y[2] *= std::exp(cplx(0.0, -x * w));
  const double norm_out = norm3(y);
  if (std::abs(norm_out - norm_in) > 1e-6) {
    throw NormError("propagate: norm drift exceeds 1e-6");
  }

  FullState out = s;
  if (pol_r) {
    out.amp_l = y[0];
    out.amp_r = y[1];
    out.amp_xxp2 = y[2];
  } else {
    out.amp_r = y[0];
    out.amp_l = y[1];
    out.amp_xxm2 = y[2];
  }
  return out;
}

Matrix2c scattering_map(const PulseParams& pulse, const PropagationSettings& settings) {
  const DotParams dot{0.0};
  FullState basis_x, basis_xx;
  if (pulse.pol == CircPolarization::R) {
    basis_x.amp_r = 1.0;
    basis_xx.amp_xxp2 = 1.0;
  } else {
    basis_x.amp_l = 1.0;
    basis_xx.amp_xxm2 = 1.0;
  }
  const FullState img_x = propagate(basis_x, dot, pulse, settings);
  const FullState img_xx = propagate(basis_xx, dot, pulse, settings);
  const bool pol_r = pulse.pol == CircPolarization::R;
  Matrix2c m;
  m[0][0] = pol_r ? img_x.amp_r : img_x.amp_l;
  m[1][0] = pol_r ? img_x.amp_xxp2 : img_x.amp_xxm2;
  m[0][1] = pol_r ? img_xx.amp_r : img_xx.amp_l;
  m[1][1] = pol_r ? img_xx.amp_xxp2 : img_xx.amp_xxm2;
  return m;
}

}  // namespace excirot
