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

#include "excirot/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "excirot/errors.hpp"

namespace excirot {

namespace {

using json = nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
  }
}

const json& expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  return j;
}

double expect_number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  return v.get<double>();
}

bool expect_bool(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_boolean()) throw ConfigError(where + "." + key + " must be a boolean");
  return v.get<bool>();
}

std::string expect_string(const json& obj, const std::string& key,
                          const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

CircPolarization parse_pol(const std::string& s, const std::string& where) {
  if (s == "R") return CircPolarization::R;
  if (s == "L") return CircPolarization::L;
  throw ConfigError(where + " must be \"R\" or \"L\"");
}

GridSpec parse_grid(const json& j, const std::string& where) {
  expect_object(j, where);
  reject_unknown_keys(j, {"start", "stop", "step"}, where);
  for (const char* key : {"start", "stop", "step"}) {
    if (!j.contains(key)) {
      throw ConfigError(where + " requires \"" + key + "\"");
    }
  }
  GridSpec g{expect_number(j, "start", where), expect_number(j, "stop", where),
             expect_number(j, "step", where)};
  if (!(g.step > 0.0)) throw ConfigError(where + ".step must be > 0");
  if (!(g.stop > g.start)) throw ConfigError(where + ".stop must be > start");
  return g;
}

// Exactly one of rabi_ratio (alpha) or area_over_pi (2 alpha) defines the
// pulse strength.
double parse_alpha(const json& obj, const std::string& where) {
  const bool has_ratio = obj.contains("rabi_ratio");
  const bool has_area = obj.contains("area_over_pi");
  if (has_ratio == has_area) {
    throw ConfigError(where + " requires exactly one of \"rabi_ratio\" or \"area_over_pi\"");
  }
  return has_ratio ? expect_number(obj, "rabi_ratio", where)
                   : 0.5 * expect_number(obj, "area_over_pi", where);
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> xs;
  const double slack = step * 1e-9;
  for (long i = 0; i < 100000000; ++i) {
    const double x = start + static_cast<double>(i) * step;
    if (x > stop + slack) return xs;
    xs.push_back(x);
  }
  throw ConfigError("grid: too many points");
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  expect_object(root, origin);
  reject_unknown_keys(root,
                      {"dot", "first_pol", "pulse", "method", "settings", "polarization",
                       "delay_ps", "detuning_uev", "tau_ps", "design"},
                      origin);

  RunConfig cfg;

  if (root.contains("dot")) {
    const json& dot = expect_object(root["dot"], "dot");
    reject_unknown_keys(dot, {"splitting_uev"}, "dot");
    if (dot.contains("splitting_uev")) {
      cfg.splitting_uev = expect_number(dot, "splitting_uev", "dot");
    }
  }

  if (root.contains("first_pol")) {
    cfg.first_pol = parse_pol(expect_string(root, "first_pol", origin), "first_pol");
  }

  if (root.contains("pulse")) {
    const json& pulse = expect_object(root["pulse"], "pulse");
    reject_unknown_keys(
        pulse, {"rabi_ratio", "area_over_pi", "bandwidth_uev", "detuning_uev", "pol"},
        "pulse");
    cfg.alpha = parse_alpha(pulse, "pulse");
    if (pulse.contains("bandwidth_uev")) {
      cfg.bandwidth_uev = expect_number(pulse, "bandwidth_uev", "pulse");
    }
    if (pulse.contains("detuning_uev")) {
      cfg.pulse_detuning_uev = expect_number(pulse, "detuning_uev", "pulse");
    }
    if (pulse.contains("pol")) {
      cfg.pulse_pol = parse_pol(expect_string(pulse, "pol", "pulse"), "pulse.pol");
    }
  }

  if (root.contains("method")) {
    const std::string m = expect_string(root, "method", origin);
    if (m == "analytic") {
      cfg.method = Method::analytic;
    } else if (m == "numeric") {
      cfg.method = Method::numeric;
    } else {
      throw ConfigError("method must be \"analytic\" or \"numeric\"");
    }
  }

  if (root.contains("settings")) {
    const json& st = expect_object(root["settings"], "settings");
    reject_unknown_keys(st, {"window", "rel_tol", "include_splitting_during_pulse"},
                        "settings");
    if (st.contains("window")) cfg.settings.window = expect_number(st, "window", "settings");
    if (st.contains("rel_tol")) cfg.settings.rel_tol = expect_number(st, "rel_tol", "settings");
    if (st.contains("include_splitting_during_pulse")) {
      cfg.settings.include_splitting_during_pulse =
          expect_bool(st, "include_splitting_during_pulse", "settings");
    }
  }

  if (root.contains("polarization")) {
    const std::string p = expect_string(root, "polarization", origin);
    if (p == "co") {
      cfg.polarization = PolarizationMode::co;
    } else if (p == "cross") {
      cfg.polarization = PolarizationMode::cross;
    } else if (p == "both") {
      cfg.polarization = PolarizationMode::both;
    } else {
      throw ConfigError("polarization must be \"co\", \"cross\" or \"both\"");
    }
    if (cfg.pulse_pol) {
      throw ConfigError("give either pulse.pol or polarization, not both");
    }
  }

  if (root.contains("delay_ps")) {
    cfg.delay_ps = parse_grid(root["delay_ps"], "delay_ps");
  }
  if (root.contains("detuning_uev")) {
    cfg.detuning_grid_uev = parse_grid(root["detuning_uev"], "detuning_uev");
  }
  if (root.contains("tau_ps")) {
    cfg.tau_ps = expect_number(root, "tau_ps", origin);
  }

  if (root.contains("design")) {
    const json& d = expect_object(root["design"], "design");
    reject_unknown_keys(
        d, {"theta_rad", "rabi_ratio", "area_over_pi", "bandwidth_uev", "sign_preference"},
        "design");
    if (!d.contains("theta_rad")) throw ConfigError("design requires \"theta_rad\"");
    if (!d.contains("bandwidth_uev")) throw ConfigError("design requires \"bandwidth_uev\"");
    DesignTarget t;
    t.theta_rad = expect_number(d, "theta_rad", "design");
    t.alpha = parse_alpha(d, "design");
    t.bandwidth_uev = expect_number(d, "bandwidth_uev", "design");
    if (d.contains("sign_preference")) {
      const std::string s = expect_string(d, "sign_preference", "design");
      if (s == "positive_detuning") {
        t.sign_preference = SignPreference::positive_detuning;
      } else if (s == "negative_detuning") {
        t.sign_preference = SignPreference::negative_detuning;
      } else {
        throw ConfigError(
            "design.sign_preference must be \"positive_detuning\" or \"negative_detuning\"");
      }
    }
    cfg.design = t;
  }

  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace excirot
