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
//
// Acceptance suite: one pass/fail line per release criterion. The criteria
// anchor the implementation to exactly known limits of the sech-pulse model
// and to equivalence between the closed form and the numerical propagator;
// laboratory data are not reproduced here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "excirot/constants.hpp"
#include "excirot/designer.hpp"
#include "excirot/errors.hpp"
#include "excirot/experiment.hpp"
#include "excirot/verify.hpp"

using namespace excirot;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

std::string g3(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

using Outcome = std::pair<bool, std::string>;

void check(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("unexpected exception: ") + e.what()};
  }
  std::printf("[%s] %2d %s%s%s\n", o.first ? "PASS" : "FAIL", id, name,
              o.second.empty() ? "" : " -- ", o.second.c_str());
  std::fflush(stdout);
  if (!o.first) ++failures;
}

ExperimentConfig reference_config(CircPolarization pulse_pol = CircPolarization::R,
                                  Method method = Method::analytic) {
  ExperimentConfig ec;
  ec.dot = DotParams{34.0};
  ec.first_pol = CircPolarization::R;
  ec.pulse = PulseParams{0.35, 145.0, -63.0, pulse_pol};
  ec.method = method;
  return ec;
}

// Least-squares residual of y ~ a + b cos(w t) + c sin(w t).
double fit_sse(const std::vector<double>& t, const std::vector<double>& y, double w) {
  double m[3][4] = {};
  for (size_t i = 0; i < t.size(); ++i) {
    const double f[3] = {1.0, std::cos(w * t[i]), std::sin(w * t[i])};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += f[r] * f[c];
      m[r][3] += f[r] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {  // gaussian elimination, partial pivoting
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double k = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= k * m[col][c];
    }
  }
  const double a = m[0][3] / m[0][0], b = m[1][3] / m[1][1], c = m[2][3] / m[2][2];
  double sse = 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    const double r = y[i] - (a + b * std::cos(w * t[i]) + c * std::sin(w * t[i]));
    sse += r * r;
  }
  return sse;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > 1e-13) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int main() {
  std::printf("excirot acceptance suite\n");

  VerifyReport grid;  // shared by criteria 1 and 2

  check(1, "oracle equivalence of apply_pulse and propagate on the standard grid", [&] {
    grid = run_oracle_grid(VerifyOptions{});
    const bool ok = grid.max_amp_diff < 1e-6 && grid.elapsed_s < 60.0;
    return Outcome{ok, "max amplitude diff " + g3(grid.max_amp_diff) + " (limit 1e-6), " +
                           std::to_string(grid.points) + " points in " +
                           g3(grid.elapsed_s) + " s (limit 60 s)"};
  });

  check(2, "unitarity of the closed form and propagator norm conservation", [&] {
    if (grid.points == 0) return Outcome{false, "oracle grid did not run"};
    const bool ok = grid.max_unitarity_defect < 1e-10 && grid.max_norm_drift < 1e-9;
    return Outcome{ok, "max |F|^2+|transfer|^2-1 = " + g3(grid.max_unitarity_defect) +
                           " (limit 1e-10), max norm drift " + g3(grid.max_norm_drift) +
                           " (limit 1e-9)"};
  });

  check(3, "exact fixed points of the pulse map", [] {
    // (a) resonant pi pulse at zero delay transfers the whole population
    ExperimentConfig ec = reference_config();
    ec.pulse = PulseParams{0.5, 145.0, 0.0, CircPolarization::R};
    const double pa = run_single(ec, 0.0).p_xx;
    const bool ok_a = std::abs(pa - 1.0) < 1e-9;
    // (b) 2pi pulse at delta = sigma: quarter turn with no residual transfer
    const PulseParams quarter{1.0, 145.0, 145.0, CircPolarization::R};
    const double theta = rotation_angle(quarter);
    const double p0 = pxx_peak(quarter);
    const bool ok_b = std::abs(theta - 0.5 * pi) < 1e-9 && p0 < 1e-12;
    // (c) on resonance the eigenstate-difference amplitude vanishes exactly
    bool ok_c = true;
    for (double alpha = 0.0; alpha <= 1.5 + 1e-9; alpha += 0.1) {
      if (dvh_amplitude(PulseParams{alpha, 145.0, 0.0, CircPolarization::R}) != 0.0) {
        ok_c = false;
      }
    }
    return Outcome{ok_a && ok_b && ok_c,
                   "(a) |P_XX-1| = " + g3(std::abs(pa - 1.0)) + ", (b) |theta-pi/2| = " +
                       g3(std::abs(theta - 0.5 * pi)) + ", P0 = " + g3(p0) +
                       ", (c) D0(delta=0) " + (ok_c ? "== 0" : "!= 0")};
  });

  // Delay sweep shared by criteria 4 and 5.
  std::vector<double> taus, pxx, dvh;
  {
    const ExperimentConfig ec = reference_config();
    for (double tau = 0.0; tau <= 400.0 + 1e-9; tau += 1.0) {
      const Observables obs = run_single(ec, tau);
      taus.push_back(tau);
      pxx.push_back(obs.p_xx);
      dvh.push_back(obs.d_vh);
    }
  }

  check(4, "fitted precession period matches 2 pi hbar / splitting", [&] {
    const auto sse = [&](double w) { return fit_sse(taus, pxx, w); };
    double best_w = 2.0 * pi / 150.0, best = sse(best_w);
    const double w_lo = 2.0 * pi / 150.0, w_hi = 2.0 * pi / 100.0;
    const double dw = (w_hi - w_lo) / 2000.0;
    for (double w = w_lo; w <= w_hi; w += dw) {
      const double s = sse(w);
      if (s < best) {
        best = s;
        best_w = w;
      }
    }
    const double w_fit = golden_min(sse, best_w - dw, best_w + dw);
    const double period = 2.0 * pi / w_fit;
    const double want = 2.0 * pi * hbar_uev_ps / 34.0;
    const bool ok = std::abs(period - want) < 0.5;
    return Outcome{ok, "fitted " + g3(period) + " ps vs " + g3(want) +
                           " ps, |diff| = " + g3(std::abs(period - want)) +
                           " ps (limit 0.5 ps)"};
  });

  check(5, "d_vh zero crossings sit on p_xx extrema", [&] {
    const double step = taus[1] - taus[0];
    std::vector<double> zeros;
    for (size_t i = 1; i + 1 < taus.size(); ++i) {
      if (dvh[i] == 0.0) {
        zeros.push_back(taus[i]);
      } else if ((dvh[i] < 0.0) != (dvh[i + 1] < 0.0) && dvh[i + 1] != 0.0) {
        zeros.push_back(taus[i] + step * dvh[i] / (dvh[i] - dvh[i + 1]));
      }
    }
    std::vector<double> extrema;
    for (size_t i = 0; i < taus.size(); ++i) {
      const bool is_max = (i == 0 || pxx[i] >= pxx[i - 1]) &&
                          (i + 1 == taus.size() || pxx[i] >= pxx[i + 1]);
      const bool is_min = (i == 0 || pxx[i] <= pxx[i - 1]) &&
                          (i + 1 == taus.size() || pxx[i] <= pxx[i + 1]);
      if (is_max || is_min) extrema.push_back(taus[i]);
    }
    double worst = 0.0;
    for (double z : zeros) {
      double nearest = 1e300;
      for (double e : extrema) nearest = std::min(nearest, std::abs(e - z));
      worst = std::max(worst, nearest);
    }
    const bool ok = zeros.size() >= 6 && worst <= step + 1e-9;
    return Outcome{ok, std::to_string(zeros.size()) + " zeros, worst distance to an extremum " +
                           g3(worst) + " ps (limit one grid step = " + g3(step) + " ps)"};
  });

  check(6, "sign of the difference amplitude follows the detuning sign", [] {
    int checked = 0;
    for (int i = -60; i <= 60; ++i) {
      if (i == 0) continue;
      const double x = 0.05 * i;
      const double d =
          dvh_amplitude(PulseParams{0.35, 145.0, x * 145.0, CircPolarization::R});
      if ((d > 0.0) != (x > 0.0) || d == 0.0) {
        return Outcome{false, "sign mismatch at delta/sigma = " + g3(x) +
                                  " (D0 = " + g3(d) + ")"};
      }
      ++checked;
    }
    return Outcome{true, std::to_string(checked) + " detunings on [-3, 3] checked"};
  });

  check(7, "cross-polarized series is the negated co series, delayed by T/2", [] {
    const double half_period = pi * hbar_uev_ps / 34.0;
    const ExperimentConfig co = reference_config(CircPolarization::R);
    const ExperimentConfig cross = reference_config(CircPolarization::L);
    double worst_d = 0.0, worst_p = 0.0;
    for (double tau = 0.0; tau <= 250.0 + 1e-9; tau += 1.0) {
      const Observables oc = run_single(co, tau);
      const Observables ox = run_single(cross, tau);
      worst_d = std::max(worst_d, std::abs(ox.d_vh + oc.d_vh));
      worst_p =
          std::max(worst_p, std::abs(ox.p_xx - run_single(co, tau + half_period).p_xx));
    }
    // same symmetry through the numerical oracle
    const ExperimentConfig co_n = reference_config(CircPolarization::R, Method::numeric);
    const ExperimentConfig cross_n =
        reference_config(CircPolarization::L, Method::numeric);
    double worst_dn = 0.0, worst_pn = 0.0;
    for (double tau = 0.0; tau <= 250.0 + 1e-9; tau += 25.0) {
      const Observables oc = run_single(co_n, tau);
      const Observables ox = run_single(cross_n, tau);
      worst_dn = std::max(worst_dn, std::abs(ox.d_vh + oc.d_vh));
      worst_pn = std::max(
          worst_pn, std::abs(ox.p_xx - run_single(co_n, tau + half_period).p_xx));
    }
    const bool ok = worst_d < 1e-9 && worst_p < 1e-9 && worst_dn < 1e-9 && worst_pn < 1e-9;
    return Outcome{ok, "analytic: max |d_x + d_co| = " + g3(worst_d) +
                           ", max p_xx shift defect " + g3(worst_p) +
                           "; numeric: " + g3(worst_dn) + ", " + g3(worst_pn) +
                           " (limit 1e-9)"};
  });

  check(8, "detuning lineshape is sech^2 with the closed-form FWHM", [] {
    ExperimentConfig ec = reference_config();
    ec.pulse = PulseParams{0.5, 145.0, 0.0, CircPolarization::R};
    std::vector<double> deltas;
    for (double d = -400.0; d <= 400.0 + 1e-9; d += 2.0) deltas.push_back(d);
    const SweepResult sweep = sweep_detuning(ec, deltas, 0.0);

    const double sigma = 145.0;
    double worst_shape = 0.0;
    for (const SweepPoint& p : sweep.points) {
      const double sech = 1.0 / std::cosh(0.5 * pi * p.x / sigma);
      worst_shape = std::max(worst_shape, std::abs(p.obs.p_xx - sech * sech));
    }

    const double half = 0.5;  // peak value is exactly 1 at delta = 0
    double left = 0.0, right = 0.0;
    for (size_t i = 0; i + 1 < sweep.points.size(); ++i) {
      const double p0 = sweep.points[i].obs.p_xx, p1 = sweep.points[i + 1].obs.p_xx;
      if (p0 < half && p1 >= half) {
        left = sweep.points[i].x +
               (half - p0) / (p1 - p0) * (sweep.points[i + 1].x - sweep.points[i].x);
      }
      if (p0 >= half && p1 < half) {
        right = sweep.points[i].x +
                (half - p0) / (p1 - p0) * (sweep.points[i + 1].x - sweep.points[i].x);
      }
    }
    const double fwhm = right - left;
    const double want = (4.0 / pi) * std::acosh(std::sqrt(2.0)) * sigma;
    const bool ok = worst_shape < 1e-12 && std::abs(fwhm - want) / want < 0.01;
    return Outcome{ok, "max shape deviation " + g3(worst_shape) + ", FWHM " + g3(fwhm) +
                           " ueV vs " + g3(want) + " ueV (" +
                           g3(100.0 * std::abs(fwhm - want) / want) + "%, limit 1%)"};
  });

  check(9, "designer round trip over (-0.95, 0.95) theta_max and infeasible reporting", [] {
    const MaxRotation mr = max_rotation_angle(0.35, 145.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      DesignTarget t;
      t.theta_rad = (-0.95 + i * (1.9 / 19.0)) * mr.theta_max;
      t.alpha = 0.35;
      t.bandwidth_uev = 145.0;
      const DesignResult r = design_detuning(t);
      const double back = rotation_angle(
          PulseParams{0.35, 145.0, r.detuning_uev, CircPolarization::R});
      worst = std::max(worst, std::abs(back - t.theta_rad));
    }
    bool infeasible_ok = false;
    double reported_max = 0.0;
    try {
      DesignTarget t;
      t.theta_rad = 1.05 * mr.theta_max;
      t.alpha = 0.35;
      t.bandwidth_uev = 145.0;
      design_detuning(t);
    } catch (const InfeasibleError& e) {
      reported_max = e.theta_max;
      infeasible_ok = std::abs(e.theta_max - mr.theta_max) < 1e-9;
    }
    const bool ok = worst < 1e-8 && infeasible_ok;
    return Outcome{ok, "worst round-trip error " + g3(worst) +
                           " rad (limit 1e-8); infeasible target reports theta_max = " +
                           g3(reported_max) + " rad"};
  });

  check(10, "the biexciton feed cancels from i_v - i_h", [] {
    double worst = 0.0;
    for (const ExperimentConfig& ec :
         {reference_config(CircPolarization::R), reference_config(CircPolarization::L)}) {
      for (double tau = 0.0; tau <= 200.0 + 1e-9; tau += 2.5) {
        const Observables with_feed = run_single(ec, tau);
        // the same state without the cascade contribution
        const FullState state = apply_pulse(
            precess(init_exciton(ec.first_pol), ec.dot, tau), ec.pulse);
        const LinearAmps lin = to_linear(state);
        const double bare = std::norm(lin.amp_v) - std::norm(lin.amp_h);
        worst = std::max(worst, std::abs(with_feed.d_vh - bare));
      }
    }
    const bool ok = worst < 1e-12;
    return Outcome{ok, "max difference " + g3(worst) + " (limit 1e-12)"};
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
