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

namespace excirot::specfun {

using cplx = std::complex<double>;

// Absolute distance below which z counts as sitting on a pole of Gamma.
inline constexpr double pole_tol = 1e-12;

bool near_nonpositive_integer(const cplx& z, double tol = pole_tol);

// Log of the Gamma function for complex argument, Lanczos approximation with
// reflection for Re z < 0.5. exp(ln_gamma(z)) reproduces Gamma(z) to relative
// 1e-12 for |z| <= 20, |Im z| <= 20. After reflection the imaginary part can
// differ from the principal branch by a multiple of 2*pi; exp() is unaffected.
// Throws PoleError within pole_tol of a non-positive integer.
cplx ln_gamma(const cplx& z);

// Hypergeometric 2F1(a, b; c; 1) by the closed form
//   Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),
// valid for Re(c-a-b) > 0. Poles of the denominator Gamma functions give an
// exact 0 (the analytic limit; reached physically by a resonant pi pulse).
// Throws DomainError if Re(c-a-b) <= 0, PoleError if Gamma(c) or
// Gamma(c-a-b) sits on a pole.
cplx gauss_2f1_unit(const cplx& a, const cplx& b, const cplx& c);

}  // namespace excirot::specfun
