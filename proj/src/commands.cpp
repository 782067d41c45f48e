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

#include "excirot/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "excirot/config.hpp"
#include "excirot/csv.hpp"
#include "excirot/errors.hpp"
#include "excirot/verify.hpp"

namespace excirot {

namespace {

double require(const std::optional<double>& v, const char* what) {
  if (!v) throw ConfigError(std::string("config is missing ") + what);
  return *v;
}

// The control-pulse polarization, from pulse.pol if given, else relative to
// the first pulse via the polarization mode.
CircPolarization resolve_pol(const RunConfig& cfg, PolarizationMode mode) {
  if (cfg.pulse_pol) return *cfg.pulse_pol;
  return mode == PolarizationMode::cross ? opposite(cfg.first_pol) : cfg.first_pol;
}

ExperimentConfig experiment_from(const RunConfig& cfg, PolarizationMode mode,
                                 double detuning_uev) {
  ExperimentConfig ec;
  ec.dot.splitting_uev = require(cfg.splitting_uev, "dot.splitting_uev");
  ec.first_pol = cfg.first_pol;
  ec.pulse.alpha = require(cfg.alpha, "pulse.rabi_ratio or pulse.area_over_pi");
  ec.pulse.bandwidth_uev = require(cfg.bandwidth_uev, "pulse.bandwidth_uev");
  ec.pulse.detuning_uev = detuning_uev;
  ec.pulse.pol = resolve_pol(cfg, mode);
  ec.method = cfg.method;
  ec.settings = cfg.settings;
  return ec;
}

PolarizationMode single_mode(const RunConfig& cfg, const char* command) {
  const PolarizationMode mode = cfg.polarization.value_or(PolarizationMode::co);
  if (mode == PolarizationMode::both) {
    throw ConfigError(std::string("polarization \"both\" is not supported by ") + command);
  }
  return mode;
}

int cmd_sweep_delay(const RunConfig& cfg, const std::string& out_path,
                    std::ostream& out) {
  if (!cfg.delay_ps) throw ConfigError("config is missing delay_ps grid");
  const PolarizationMode mode = single_mode(cfg, "sweep-delay");
  const ExperimentConfig ec =
      experiment_from(cfg, mode, require(cfg.pulse_detuning_uev, "pulse.detuning_uev"));

  const std::vector<double> grid = cfg.delay_ps->points();
  SweepResult series = sweep_delay(ec, grid);
  const bool has_baseline =
      std::any_of(series.points.begin(), series.points.end(),
                  [](const SweepPoint& p) { return p.x < 0.0; });
  // Without negative-delay points the baseline sum is 1 by construction
  // (total excitation is conserved), so d_vh is already normalized.
  if (has_baseline) series = normalized_difference(series);

  std::string csv = "tau_ps,p_xx,i_h,i_v,d_vh_norm\n";
  for (const SweepPoint& p : series.points) {
    csv += format_g12(p.x) + ',' + format_g12(p.obs.p_xx) + ',' + format_g12(p.obs.i_h) +
           ',' + format_g12(p.obs.i_v) + ',' + format_g12(p.obs.d_vh) + '\n';
  }
  write_text_file(out_path, csv);
  out << "sweep-delay: " << series.points.size() << " points -> " << out_path << "\n";
  return exit_ok;
}

int cmd_sweep_detuning(const RunConfig& cfg, const std::string& out_path,
                       std::ostream& out) {
  if (!cfg.detuning_grid_uev) throw ConfigError("config is missing detuning_uev grid");
  const PolarizationMode requested = cfg.polarization.value_or(PolarizationMode::co);
  std::vector<PolarizationMode> modes;
  if (requested == PolarizationMode::both) {
    if (cfg.pulse_pol) {
      throw ConfigError("polarization \"both\" conflicts with pulse.pol");
    }
    modes = {PolarizationMode::co, PolarizationMode::cross};
  } else {
    modes = {requested};
  }

  const std::vector<double> grid = cfg.detuning_grid_uev->points();
  std::string csv = "delta_ueV,delta_over_sigma,p_xx,d0_vh,theta_rad\n";
  size_t rows = 0;
  for (PolarizationMode mode : modes) {
    const ExperimentConfig ec = experiment_from(cfg, mode, 0.0);
    const SweepResult series = sweep_detuning(ec, grid, cfg.tau_ps);
    const double co_sign = (resolve_pol(cfg, mode) == cfg.first_pol) ? 1.0 : -1.0;
    for (const SweepPoint& p : series.points) {
      PulseParams pulse = ec.pulse;
      pulse.detuning_uev = p.x;
      const double d0 = co_sign * dvh_amplitude(pulse);
      const double theta =
          p.obs.theta_rad ? *p.obs.theta_rad : std::numeric_limits<double>::quiet_NaN();
      csv += format_g12(p.x) + ',' + format_g12(p.x / pulse.bandwidth_uev) + ',' +
             format_g12(p.obs.p_xx) + ',' + format_g12(d0) + ',' + format_g12(theta) +
             '\n';
      ++rows;
    }
  }
  write_text_file(out_path, csv);
  out << "sweep-detuning: " << rows << " rows -> " << out_path << "\n";
  return exit_ok;
}

int cmd_design(const RunConfig& cfg, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  if (!cfg.design) throw ConfigError("config is missing the design section");
  const DesignTarget& target = *cfg.design;
  DesignResult result;
  try {
    result = design_detuning(target);
  } catch (const InfeasibleError& e) {
    err << "design: infeasible target: " << e.what()
        << " (theta_max = " << format_g12(e.theta_max) << " rad)\n";
    return exit_infeasible;
  }
  std::string csv =
      "target_theta_rad,alpha,bandwidth_uev,detuning_uev,achieved_theta_rad,"
      "residual_p_xx,iterations\n";
  csv += format_g12(target.theta_rad) + ',' + format_g12(target.alpha) + ',' +
         format_g12(target.bandwidth_uev) + ',' + format_g12(result.detuning_uev) + ',' +
         format_g12(result.achieved_theta) + ',' + format_g12(result.residual_p_xx) +
         ',' + std::to_string(result.iterations) + '\n';
  write_text_file(out_path, csv);
  out << "design: target " << format_g12(target.theta_rad) << " rad at alpha "
      << format_g12(target.alpha) << " -> detuning " << format_g12(result.detuning_uev)
      << " ueV (achieved " << format_g12(result.achieved_theta) << " rad, residual P_XX "
      << format_g12(result.residual_p_xx) << ", " << result.iterations
      << " iterations) -> " << out_path << "\n";
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path, std::ostream& out) {
  VerifyOptions opts;
  opts.settings = cfg.settings;
  if (cfg.bandwidth_uev) opts.bandwidth_uev = *cfg.bandwidth_uev;
  const VerifyReport report = run_oracle_grid(opts);
  const std::string text = report.summary();
  out << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  return report.pass ? exit_ok : exit_verify_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum-dot exciton spin rotation: closed-form sech-pulse dynamics, "
               "numerical oracle, pump-probe sweeps and inverse pulse design"};
  app.name("excirot");
  app.require_subcommand(1);

  std::string config_path, out_path, method_override;

  const auto add_common = [&](CLI::App* sub, bool config_required) {
    sub->add_option("--config", config_path, "configuration file (JSON)")
        ->required(config_required);
    sub->add_option("--out", out_path, "output file");
    return sub;
  };
  const auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method_override, "override the configured method")
        ->check(CLI::IsMember({"analytic", "numeric"}));
  };

  CLI::App* sweep_delay_cmd =
      add_common(app.add_subcommand("sweep-delay",
                                    "biexciton population and eigenstate intensities vs "
                                    "pulse delay (CSV)"),
                 true);
  sweep_delay_cmd->get_option("--out")->required();
  add_method(sweep_delay_cmd);

  CLI::App* sweep_detuning_cmd =
      add_common(app.add_subcommand("sweep-detuning",
                                    "observables vs control-pulse detuning at fixed "
                                    "delay (CSV)"),
                 true);
  sweep_detuning_cmd->get_option("--out")->required();
  add_method(sweep_detuning_cmd);

  CLI::App* design_cmd = add_common(
      app.add_subcommand("design", "solve for the detuning reaching a target angle"),
      true);
  design_cmd->get_option("--out")->required();

  CLI::App* verify_cmd = add_common(
      app.add_subcommand("verify", "closed form vs numerical propagator on a grid"),
      false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_config_error;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    if (method_override == "analytic") cfg.method = Method::analytic;
    if (method_override == "numeric") cfg.method = Method::numeric;

    if (app.got_subcommand(sweep_delay_cmd)) return cmd_sweep_delay(cfg, out_path, out);
    if (app.got_subcommand(sweep_detuning_cmd)) {
      return cmd_sweep_detuning(cfg, out_path, out);
    }
    if (app.got_subcommand(design_cmd)) return cmd_design(cfg, out_path, out, err);
    return cmd_verify(cfg, out_path, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const InfeasibleError& e) {
    err << "design: infeasible target: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace excirot
