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

#include <complex>

namespace excirot {

using cplx = std::complex<double>;

// R carries angular momentum +1, L carries -1.
enum class CircPolarization { R, L };

inline CircPolarization opposite(CircPolarization pol) {
  return pol == CircPolarization::R ? CircPolarization::L : CircPolarization::R;
}

// Exciton fine-structure splitting hbar*Delta between the linear eigenstates.
struct DotParams {
  double splitting_uev = 0.0;
};

// Amplitudes over the basis {|L>, |R>, |XX,-2>, |XX,+2>}.
struct FullState {
  cplx amp_l{};
  cplx amp_r{};
  cplx amp_xxm2{};
  cplx amp_xxp2{};

  double norm2() const;
  double exciton_norm2() const;
};

struct LinearAmps {
  cplx amp_h{};
  cplx amp_v{};
};

// Exciton-subspace Bloch vector; |v| < 1 when amplitude sits in the biexciton.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

FullState init_exciton(CircPolarization pol);

// |H> = (|R> + |L>)/sqrt(2), |V> = (|R> - |L>)/(i sqrt(2)):
// amp_h = (amp_l + amp_r)/sqrt(2), amp_v = i (amp_r - amp_l)/sqrt(2).
LinearAmps to_linear(const FullState& s);

// Inverse of to_linear on the exciton subspace; biexciton amplitudes pass through.
FullState from_linear(const LinearAmps& lin, const cplx& amp_xxm2 = {},
                      const cplx& amp_xxp2 = {});

// Free spin precession for dt picoseconds at angular frequency
// Delta = splitting_uev / hbar. The global phase is dropped; biexciton
// amplitudes are left untouched.
FullState precess(const FullState& s, const DotParams& dot, double dt_ps);

// z = -2 Re(amp_l conj(amp_r)) puts |V> at the north pole and |H> at the
// south pole; x = |amp_r|^2 - |amp_l|^2 is the circular-polarization degree;
// y = -2 Im(amp_l conj(amp_r)) completes the right-handed frame.
BlochVector bloch_vector(const FullState& s);

}  // namespace excirot
