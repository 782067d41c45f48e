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

#include "excirot/specfun.hpp"

#include <cmath>
#include <numbers>

#include "excirot/errors.hpp"

namespace excirot::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// g = 7, 9 terms; accurate to ~1e-13 in the right half plane.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_coeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

void require_finite(const cplx& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

}  // namespace

bool near_nonpositive_integer(const cplx& z, double tol) {
  if (z.real() > 0.5) return false;
  const double nearest = std::round(z.real());
  if (nearest > 0.0) return false;
  return std::abs(z - cplx(nearest, 0.0)) <= tol;
}

cplx ln_gamma(const cplx& z) {
  require_finite(z, "ln_gamma");
  if (near_nonpositive_integer(z)) {
    throw PoleError("ln_gamma: argument within 1e-12 of a pole");
  }
  if (z.real() < 0.5) {
    return std::log(pi / std::sin(pi * z)) - ln_gamma(1.0 - z);
  }
  const cplx zm = z - 1.0;
  cplx sum = lanczos_coeff[0];
  for (int i = 1; i < 9; ++i) {
    sum += lanczos_coeff[i] / (zm + static_cast<double>(i));
  }
  const cplx t = zm + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(sum);
}

cplx gauss_2f1_unit(const cplx& a, const cplx& b, const cplx& c) {
  require_finite(a, "gauss_2f1_unit");
  require_finite(b, "gauss_2f1_unit");
  require_finite(c, "gauss_2f1_unit");
  const cplx s = c - a - b;
  if (!(s.real() > 0.0)) {
    throw DomainError("gauss_2f1_unit: requires Re(c - a - b) > 0");
  }
  if (near_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1_unit: c within 1e-12 of a pole");
  }
  if (near_nonpositive_integer(s)) {
    throw PoleError("gauss_2f1_unit: c - a - b within 1e-12 of a pole");
  }
  // A pole in the denominator kills the whole expression; this is the analytic
  // limit (e.g. the resonant pi pulse), not an error.
  if (near_nonpositive_integer(c - a) || near_nonpositive_integer(c - b)) {
    return {0.0, 0.0};
  }
  return std::exp(ln_gamma(c) + ln_gamma(s) - ln_gamma(c - a) - ln_gamma(c - b));
}

}  // namespace excirot::specfun
