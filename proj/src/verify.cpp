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

#include "excirot/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "excirot/errors.hpp"

namespace excirot {

namespace {

constexpr double amp_limit = 1e-6;
constexpr double unitarity_limit = 1e-10;
constexpr double drift_limit = 1e-9;

double max_amp_difference(const FullState& a, const FullState& b) {
  double m = std::abs(a.amp_l - b.amp_l);
  m = std::max(m, std::abs(a.amp_r - b.amp_r));
  m = std::max(m, std::abs(a.amp_xxm2 - b.amp_xxm2));
  m = std::max(m, std::abs(a.amp_xxp2 - b.amp_xxp2));
  return m;
}

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "oracle grid: " << points << " points in " << elapsed_s << " s\n";
  os << "  max |amplitude difference| analytic vs numeric: " << max_amp_diff
     << " (limit " << amp_limit << ")\n";
  os << "  max unitarity defect |F|^2 + |transfer|^2 - 1: " << max_unitarity_defect
     << " (limit " << unitarity_limit << ")\n";
  os << "  max propagator norm drift: " << max_norm_drift << " (limit " << drift_limit
     << ")\n";
  os << (pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return os.str();
}

VerifyReport run_oracle_grid(const VerifyOptions& opts, const AnalyticMap& analytic) {
  validate(opts.settings);
  if (opts.settings.include_splitting_during_pulse) {
    throw DomainError("run_oracle_grid: the closed form assumes the splitting is frozen");
  }
  const AnalyticMap map = analytic
                              ? analytic
                              : [](const FullState& s, const PulseParams& p) {
                                  return apply_pulse(s, p);
                                };

  // A generic superposition exercising both the coupled and uncoupled
  // amplitudes (fixed, so runs are reproducible).
  const FullState probe = precess(init_exciton(CircPolarization::R), DotParams{34.0}, 17.3);
  const DotParams dot{0.0};

  VerifyReport report;
  const auto t0 = std::chrono::steady_clock::now();
  for (double alpha = 0.0; alpha <= opts.alpha_max + 1e-9; alpha += opts.alpha_step) {
    for (double x = opts.x_min; x <= opts.x_max + 1e-9; x += opts.x_step) {
      const PulseParams pulse{alpha, opts.bandwidth_uev, x * opts.bandwidth_uev,
                              CircPolarization::R};
      const FullState got_analytic = map(probe, pulse);
      const FullState got_numeric = propagate(probe, dot, pulse, opts.settings);
      report.max_amp_diff =
          std::max(report.max_amp_diff, max_amp_difference(got_analytic, got_numeric));

      const double unit = std::abs(std::norm(survival_factor(pulse)) +
                                   std::norm(transfer_factor(pulse)) - 1.0);
      report.max_unitarity_defect = std::max(report.max_unitarity_defect, unit);

      const double drift =
          std::abs(std::sqrt(got_numeric.norm2()) - std::sqrt(probe.norm2()));
      report.max_norm_drift = std::max(report.max_norm_drift, drift);
      ++report.points;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
  report.pass = report.max_amp_diff < amp_limit &&
                report.max_unitarity_defect < unitarity_limit &&
                report.max_norm_drift < drift_limit;
  return report;
}

}  // namespace excirot
