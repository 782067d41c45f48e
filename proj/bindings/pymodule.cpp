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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "excirot/constants.hpp"
#include "excirot/designer.hpp"
#include "excirot/errors.hpp"
#include "excirot/experiment.hpp"
#include "excirot/verify.hpp"

namespace py = pybind11;
using namespace excirot;

PYBIND11_MODULE(_excirot, m) {
  m.doc() =
      "Exciton spin rotation by detuned sech pulses in a quantum dot: "
      "closed-form pulse map, numerical propagator, pump-probe observables "
      "and inverse pulse design.";

  m.attr("HBAR_UEV_PS") = hbar_uev_ps;
  m.def("fwhm_to_bandwidth", &fwhm_to_bandwidth, py::arg("fwhm_ps"),
        "Bandwidth hbar*sigma in ueV from the temporal intensity FWHM of a "
        "sech^2 pulse in ps.");

  auto exc_error = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", exc_error);
  py::register_exception<PoleError>(m, "PoleError", exc_error);
  py::register_exception<DegenerateError>(m, "DegenerateError", exc_error);
  py::register_exception<ToleranceError>(m, "ToleranceError", exc_error);
  py::register_exception<NormError>(m, "NormError", exc_error);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", exc_error);
  py::register_exception<MissingBaselineError>(m, "MissingBaselineError", exc_error);
  py::register_exception<ConfigError>(m, "ConfigError", exc_error);

  // InfeasibleError carries the reachable maximum; expose it as an attribute.
  static py::exception<InfeasibleError> exc_infeasible(m, "InfeasibleError",
                                                       exc_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleError& e) {
      const py::object type = py::reinterpret_borrow<py::object>(exc_infeasible.ptr());
      const py::object inst = type(e.what());
      inst.attr("theta_max") = e.theta_max;
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::enum_<CircPolarization>(m, "CircPolarization")
      .value("R", CircPolarization::R)
      .value("L", CircPolarization::L);
  m.def("opposite", &opposite, py::arg("pol"));

  py::enum_<Method>(m, "Method")
      .value("analytic", Method::analytic)
      .value("numeric", Method::numeric);

  py::enum_<SignPreference>(m, "SignPreference")
      .value("positive_detuning", SignPreference::positive_detuning)
      .value("negative_detuning", SignPreference::negative_detuning);

  py::class_<DotParams>(m, "DotParams")
      .def(py::init<>())
      .def(py::init([](double splitting_uev) {
             return DotParams{splitting_uev};
           }),
           py::arg("splitting_uev"))
      .def_readwrite("splitting_uev", &DotParams::splitting_uev);

  py::class_<PulseParams>(m, "PulseParams")
      .def(py::init<>())
      .def(py::init([](double alpha, double bandwidth_uev, double detuning_uev,
                       CircPolarization pol) {
             return PulseParams{alpha, bandwidth_uev, detuning_uev, pol};
           }),
           py::arg("alpha"), py::arg("bandwidth_uev"), py::arg("detuning_uev") = 0.0,
           py::arg("pol") = CircPolarization::R)
      .def_readwrite("alpha", &PulseParams::alpha)
      .def_readwrite("bandwidth_uev", &PulseParams::bandwidth_uev)
      .def_readwrite("detuning_uev", &PulseParams::detuning_uev)
      .def_readwrite("pol", &PulseParams::pol);

  py::class_<FullState>(m, "FullState")
      .def(py::init<>())
      .def_readwrite("amp_l", &FullState::amp_l)
      .def_readwrite("amp_r", &FullState::amp_r)
      .def_readwrite("amp_xxm2", &FullState::amp_xxm2)
      .def_readwrite("amp_xxp2", &FullState::amp_xxp2)
      .def("norm2", &FullState::norm2)
      .def("exciton_norm2", &FullState::exciton_norm2);

  py::class_<LinearAmps>(m, "LinearAmps")
      .def(py::init<>())
      .def_readwrite("amp_h", &LinearAmps::amp_h)
      .def_readwrite("amp_v", &LinearAmps::amp_v);

  py::class_<BlochVector>(m, "BlochVector")
      .def_readwrite("x", &BlochVector::x)
      .def_readwrite("y", &BlochVector::y)
      .def_readwrite("z", &BlochVector::z);

  py::class_<PropagationSettings>(m, "PropagationSettings")
      .def(py::init<>())
      .def_readwrite("window", &PropagationSettings::window)
      .def_readwrite("rel_tol", &PropagationSettings::rel_tol)
      .def_readwrite("include_splitting_during_pulse",
                     &PropagationSettings::include_splitting_during_pulse);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("dot", &ExperimentConfig::dot)
      .def_readwrite("first_pol", &ExperimentConfig::first_pol)
      .def_readwrite("pulse", &ExperimentConfig::pulse)
      .def_readwrite("method", &ExperimentConfig::method)
      .def_readwrite("settings", &ExperimentConfig::settings);

  py::class_<Observables>(m, "Observables")
      .def_readwrite("p_xx", &Observables::p_xx)
      .def_readwrite("i_h", &Observables::i_h)
      .def_readwrite("i_v", &Observables::i_v)
      .def_readwrite("d_vh", &Observables::d_vh)
      .def_readwrite("theta_rad", &Observables::theta_rad);

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readwrite("x", &SweepPoint::x)
      .def_readwrite("obs", &SweepPoint::obs);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readwrite("variable_name", &SweepResult::variable_name)
      .def_readwrite("points", &SweepResult::points);

  py::class_<DesignTarget>(m, "DesignTarget")
      .def(py::init<>())
      .def(py::init([](double theta_rad, double alpha, double bandwidth_uev,
                       SignPreference sign_preference) {
             return DesignTarget{theta_rad, alpha, bandwidth_uev, sign_preference};
           }),
           py::arg("theta_rad"), py::arg("alpha"), py::arg("bandwidth_uev"),
           py::arg("sign_preference") = SignPreference::positive_detuning)
      .def_readwrite("theta_rad", &DesignTarget::theta_rad)
      .def_readwrite("alpha", &DesignTarget::alpha)
      .def_readwrite("bandwidth_uev", &DesignTarget::bandwidth_uev)
      .def_readwrite("sign_preference", &DesignTarget::sign_preference);

  py::class_<DesignResult>(m, "DesignResult")
      .def_readwrite("detuning_uev", &DesignResult::detuning_uev)
      .def_readwrite("achieved_theta", &DesignResult::achieved_theta)
      .def_readwrite("residual_p_xx", &DesignResult::residual_p_xx)
      .def_readwrite("iterations", &DesignResult::iterations);

  py::class_<MaxRotation>(m, "MaxRotation")
      .def_readwrite("theta_max", &MaxRotation::theta_max)
      .def_readwrite("delta_star_uev", &MaxRotation::delta_star_uev);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("settings", &VerifyOptions::settings)
      .def_readwrite("alpha_max", &VerifyOptions::alpha_max)
      .def_readwrite("alpha_step", &VerifyOptions::alpha_step)
      .def_readwrite("x_min", &VerifyOptions::x_min)
      .def_readwrite("x_max", &VerifyOptions::x_max)
      .def_readwrite("x_step", &VerifyOptions::x_step)
      .def_readwrite("bandwidth_uev", &VerifyOptions::bandwidth_uev);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readwrite("max_amp_diff", &VerifyReport::max_amp_diff)
      .def_readwrite("max_unitarity_defect", &VerifyReport::max_unitarity_defect)
      .def_readwrite("max_norm_drift", &VerifyReport::max_norm_drift)
      .def_readwrite("points", &VerifyReport::points)
      .def_readwrite("elapsed_s", &VerifyReport::elapsed_s)
      .def_readwrite("pass_", &VerifyReport::pass)
      .def("summary", &VerifyReport::summary);

  m.def("init_exciton", &init_exciton, py::arg("pol"));
  m.def("to_linear", &to_linear, py::arg("state"));
  m.def("from_linear", &from_linear, py::arg("lin"), py::arg("amp_xxm2") = cplx{},
        py::arg("amp_xxp2") = cplx{});
  m.def("precess", &precess, py::arg("state"), py::arg("dot"), py::arg("dt_ps"));
  m.def("bloch_vector", &bloch_vector, py::arg("state"));

  m.def("survival_factor", &survival_factor, py::arg("pulse"));
  m.def("transfer_factor", &transfer_factor, py::arg("pulse"));
  m.def("apply_pulse", &apply_pulse, py::arg("state"), py::arg("pulse"));
  m.def("pxx_peak", &pxx_peak, py::arg("pulse"));
  m.def("pxx_complement", &pxx_complement, py::arg("pulse"));
  m.def("pxx_closed_form", &pxx_closed_form, py::arg("pulse"), py::arg("dot"),
        py::arg("tau_ps"), py::arg("first_pol"));
  m.def("dvh_amplitude", &dvh_amplitude, py::arg("pulse"));
  m.def("dvh_series", &dvh_series, py::arg("pulse"), py::arg("dot"), py::arg("tau_ps"),
        py::arg("first_pol"));
  m.def("rotation_angle", &rotation_angle, py::arg("pulse"));

  m.def("propagate", &propagate, py::arg("state"), py::arg("dot"), py::arg("pulse"),
        py::arg("settings") = PropagationSettings{});
  m.def("scattering_map", &scattering_map, py::arg("pulse"),
        py::arg("settings") = PropagationSettings{});

  m.def(
      "pl_intensities",
      [](const FullState& s) {
        double i_h = 0.0, i_v = 0.0, p_xx = 0.0;
        pl_intensities(s, i_h, i_v, p_xx);
        return py::make_tuple(i_h, i_v, p_xx);
      },
      py::arg("state"), "Returns (i_h, i_v, p_xx).");
  m.def("run_single", &run_single, py::arg("config"), py::arg("tau_ps"));
  m.def("normalized_difference", &normalized_difference, py::arg("series"));
  m.def("sweep_delay", &sweep_delay, py::arg("config"), py::arg("tau_grid_ps"));
  m.def("sweep_detuning", &sweep_detuning, py::arg("config"),
        py::arg("detuning_grid_uev"), py::arg("tau_ps"));

  m.def("max_rotation_angle", &max_rotation_angle, py::arg("alpha"),
        py::arg("bandwidth_uev"));
  m.def("design_detuning", &design_detuning, py::arg("target"));

  m.def("run_oracle_grid",
        [](const VerifyOptions& opts) { return run_oracle_grid(opts); },
        py::arg("options") = VerifyOptions{});
}
