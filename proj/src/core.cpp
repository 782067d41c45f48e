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

#include "excirot/core.hpp"

#include <cmath>

#include "excirot/constants.hpp"
#include "excirot/errors.hpp"

namespace excirot {

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

double FullState::norm2() const {
  return std::norm(amp_l) + std::norm(amp_r) + std::norm(amp_xxm2) + std::norm(amp_xxp2);
}

double FullState::exciton_norm2() const { return std::norm(amp_l) + std::norm(amp_r); }

FullState init_exciton(CircPolarization pol) {
  FullState s;
  if (pol == CircPolarization::R) {
    s.amp_r = 1.0;
  } else {
    s.amp_l = 1.0;
  }
  return s;
}

LinearAmps to_linear(const FullState& s) {
  LinearAmps lin;
  lin.amp_h = (s.amp_l + s.amp_r) * inv_sqrt2;
  lin.amp_v = cplx(0.0, 1.0) * (s.amp_r - s.amp_l) * inv_sqrt2;
  return lin;
}

FullState from_linear(const LinearAmps& lin, const cplx& amp_xxm2, const cplx& amp_xxp2) {
  FullState s;
  const cplx i{0.0, 1.0};
  s.amp_l = (lin.amp_h + i * lin.amp_v) * inv_sqrt2;
  s.amp_r = (lin.amp_h - i * lin.amp_v) * inv_sqrt2;
  s.amp_xxm2 = amp_xxm2;
  s.amp_xxp2 = amp_xxp2;
  return s;
}

FullState precess(const FullState& s, const DotParams& dot, double dt_ps) {
  if (dot.splitting_uev < 0.0) {
    throw DomainError("precess: splitting_uev must be >= 0");
  }
  if (!std::isfinite(dt_ps)) {
    throw DomainError("precess: dt must be finite");
  }
  const double half = 0.5 * (dot.splitting_uev / hbar_uev_ps) * dt_ps;
  const double c = std::cos(half);
  const cplx is{0.0, std::sin(half)};
  FullState out = s;
  out.amp_l = c * s.amp_l + is * s.amp_r;
  out.amp_r = is * s.amp_l + c * s.amp_r;
  return out;
}

BlochVector bloch_vector(const FullState& s) {
  const cplx pq = s.amp_l * std::conj(s.amp_r);
  BlochVector v;
  v.x = std::norm(s.amp_r) - std::norm(s.amp_l);
  v.y = -2.0 * pq.imag();
  v.z = -2.0 * pq.real();
  return v;
}

}  // namespace excirot
