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

#include "excirot/designer.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "excirot/errors.hpp"

namespace excirot {

namespace {

constexpr double scan_hi = 10.0;     // delta/sigma search ceiling
constexpr int scan_points = 4000;
constexpr double golden_tol = 1e-10;
constexpr int max_bisect = 200;

// Rotation angle as a function of x = delta/sigma at fixed alpha; the
// bandwidth scales out of the angle entirely.
double theta_of(double alpha, double x) {
  return rotation_angle(PulseParams{alpha, 1.0, x, CircPolarization::R});
}

// Smallest |delta/sigma| probed by the optimizers. Below this a near-pi pulse
// (alpha ~ 0.5) leaves too little exciton amplitude for the angle to be
// defined; 1e-5 keeps every probe clear of that corner for all alpha.
constexpr double x_floor = 1e-5;

// Golden-section maximization of theta_of(alpha, .) on [lo, hi].
std::pair<double, double> golden_max(double alpha, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = theta_of(alpha, c);
  double fd = theta_of(alpha, d);
  while (hi - lo > golden_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = theta_of(alpha, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = theta_of(alpha, d);
    }
  }
  const double xm = 0.5 * (lo + hi);
  return {theta_of(alpha, xm), xm};
}

struct Root {
  double x = 0.0;
  double theta = 0.0;
  int iterations = 0;
};

// Bisection for theta_of(alpha, sign*x) = target on [lo, hi] with a sign change.
Root bisect(double alpha, double sign, double lo, double hi, double glo, double target) {
  Root root;
  for (int it = 1; it <= max_bisect; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double theta = theta_of(alpha, sign * mid);
    root = {mid, theta, it};
    const double g = theta - target;
    if (std::abs(g) <= 1e-10 || hi - lo < 1e-15) {
      return root;
    }
    if ((g < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = g;
    } else {
      hi = mid;
    }
  }
  throw NonConvergenceError("design_detuning: bisection did not converge");
}

}  // namespace

MaxRotation max_rotation_angle(double alpha, double bandwidth_uev) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("max_rotation_angle: alpha must be >= 0");
  }
  if (!(bandwidth_uev > 0.0)) {
    throw DomainError("max_rotation_angle: bandwidth_uev must be positive");
  }
  if (alpha == 0.0) {
    return {0.0, 0.0};
  }
  const double dx = scan_hi / scan_points;
  double best_x = dx;
  double best_theta = theta_of(alpha, dx);
  for (int i = 2; i <= scan_points; ++i) {
    const double x = i * dx;
    const double theta = theta_of(alpha, x);
    if (theta > best_theta) {
      best_theta = theta;
      best_x = x;
    }
  }
  const double lo = std::max(best_x - dx, x_floor);
  const double hi = std::min(best_x + dx, scan_hi);
  const auto [theta_max, x_star] = golden_max(alpha, lo, hi);
  return {theta_max, x_star * bandwidth_uev};
}

DesignResult design_detuning(const DesignTarget& target) {
  if (!(std::abs(target.theta_rad) <= std::numbers::pi / 2 + 1e-12)) {
    throw DomainError("design_detuning: |theta_rad| must be <= pi/2");
  }
  if (!(target.bandwidth_uev > 0.0)) {
    throw DomainError("design_detuning: bandwidth_uev must be positive");
  }
  const double alpha = target.alpha;
  const double bw = target.bandwidth_uev;
  const double theta_t = target.theta_rad;

  if (theta_t == 0.0) {
    return {0.0, 0.0, pxx_peak(PulseParams{alpha, bw, 0.0, CircPolarization::R}), 0};
  }

  const MaxRotation mr = max_rotation_angle(alpha, bw);
  if (std::abs(theta_t) > mr.theta_max + 1e-12) {
    throw InfeasibleError("design_detuning: target " + std::to_string(theta_t) +
                              " rad exceeds the reachable maximum " +
                              std::to_string(mr.theta_max) + " rad",
                          mr.theta_max);
  }
  const double x_star = mr.delta_star_uev / bw;

  const double preferred =
      target.sign_preference == SignPreference::positive_detuning ? 1.0 : -1.0;
  const double dx = scan_hi / scan_points;

  for (double sign : {preferred, -preferred}) {
    // The maximum itself may be the only solution (tangential target).
    const double theta_at_star = theta_of(alpha, sign * x_star);
    if (std::abs(theta_at_star - theta_t) <= 1e-9) {
      return {sign * mr.delta_star_uev, theta_at_star,
              pxx_peak(PulseParams{alpha, bw, sign * mr.delta_star_uev,
                                   CircPolarization::R}),
              0};
    }
    // March outward from zero detuning; the first sign change gives the
    // smallest-|delta| solution on this side.
    double x_prev = 1e-9;
    double g_prev;
    try {
      g_prev = theta_of(alpha, sign * x_prev) - theta_t;
    } catch (const DegenerateError&) {
      x_prev = x_floor;
      g_prev = theta_of(alpha, sign * x_prev) - theta_t;
    }
    for (int i = 1; i <= scan_points; ++i) {
      const double x = i * dx;
      const double g = theta_of(alpha, sign * x) - theta_t;
      if (g == 0.0 || (g < 0.0) != (g_prev < 0.0)) {
        const Root root = bisect(alpha, sign, x_prev, x, g_prev, theta_t);
        const double detuning = sign * root.x * bw;
        return {detuning, root.theta,
                pxx_peak(PulseParams{alpha, bw, detuning, CircPolarization::R}),
                root.iterations};
      }
      x_prev = x;
      g_prev = g;
    }
  }
  throw InfeasibleError("design_detuning: no detuning bracket found for target " +
                            std::to_string(theta_t) + " rad (max " +
                            std::to_string(mr.theta_max) + " rad)",
                        mr.theta_max);
}

}  // namespace excirot
