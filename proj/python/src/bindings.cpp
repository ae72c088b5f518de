// Copyright 2026 The chernsim Authors
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

#include <memory>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chernsim/adiabatic.hpp"
#include "chernsim/models.hpp"
#include "chernsim/mps.hpp"
#include "chernsim/oracle.hpp"
#include "chernsim/pipeline.hpp"
#include "chernsim/readout.hpp"

namespace py = pybind11;
using namespace chernsim;

namespace {

pipeline::RunConfig config_from_kwargs(const py::dict& kwargs) {
  pipeline::json j = pipeline::json::object();
  pipeline::json model = pipeline::json::object();
  for (auto item : kwargs) {
    const std::string key = py::cast<std::string>(item.first);
    if (key == "model") {
      model["name"] = py::cast<std::string>(item.second);
    } else if (key == "u" || key == "m" || key == "phi" || key == "t1" || key == "t2") {
      model[key] = py::cast<double>(item.second);
    } else if (key == "backend" || key == "zone" || key == "sample_point") {
      j[key] = py::cast<std::string>(item.second);
    } else if (key == "total_time" || key == "cutoff" || key == "density_eps") {
      j[key] = py::cast<double>(item.second);
    } else if (key == "full_double_loop") {
      j[key] = py::cast<bool>(item.second);
    } else {
      j[key] = py::cast<std::int64_t>(item.second);
    }
  }
  j["model"] = model.empty() ? pipeline::json{{"name", "qwz"}} : model;
  return pipeline::config_from_json(j);
}

py::object json_to_py(const pipeline::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Berry phases, Berry fluxes and Chern numbers of two-dimensional band models, "
            "computed by simulated quantum circuits and checked against exact Wilson loops";

  py::register_exception<GapClosureError>(m, "GapClosureError");
  py::register_exception<BackendError>(m, "BackendError");
  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<BlochModel, std::shared_ptr<BlochModel>>(m, "BlochModel")
      .def("h", &BlochModel::h, py::arg("q"), "Bloch Hamiltonian at reduced momentum q")
      .def_property_readonly("name", &BlochModel::name);

  py::class_<QwzModel, BlochModel, std::shared_ptr<QwzModel>>(m, "QwzModel")
      .def(py::init<double>(), py::arg("u"))
      .def_property_readonly("u", &QwzModel::u);

  py::class_<HaldaneModel, BlochModel, std::shared_ptr<HaldaneModel>>(m, "HaldaneModel")
      .def(py::init<double, double, double, double>(), py::arg("m"), py::arg("phi"),
           py::arg("t1") = 1.0, py::arg("t2") = 1.0);

  m.def("qwz_h", [](double kx, double ky, double u) { return qwz_h(Vector2d(kx, ky), u); },
        py::arg("kx"), py::arg("ky"), py::arg("u"));
  m.def("haldane_h",
        [](double kx, double ky, double mass, double phi, double t1, double t2) {
          return haldane_h(Vector2d(kx, ky), mass, phi, t1, t2);
        },
        py::arg("kx"), py::arg("ky"), py::arg("m"), py::arg("phi"), py::arg("t1") = 1.0,
        py::arg("t2") = 1.0, "Haldane Hamiltonian at Cartesian momentum");
  m.def("ground_state",
        [](const BlochModel& model, double q1, double q2) {
          return ground_state(model, Vector2d(q1, q2));
        });
  m.def("ground_prep_unitary", [](const BlochModel& model, double q1, double q2) {
    return ground_prep_unitary(model, Vector2d(q1, q2));
  });

  m.def("wilson_loop", &oracle::wilson_loop, py::arg("states"),
        "Berry phase of a closed discretized loop of states");
  m.def("plaquette_flux",
        [](const BlochModel& model, double kx, double ky, double dk) {
          return oracle::plaquette_flux(model, Vector2d(kx, ky), dk);
        },
        py::arg("model"), py::arg("kx"), py::arg("ky"), py::arg("dk"));
  m.def("chern_fukui",
        [](const BlochModel& model, int n) {
          auto grid = oracle::chern_fukui(model, n);
          return py::make_tuple(grid.flux, grid.chern_int, grid.chern_real);
        },
        py::arg("model"), py::arg("n") = 15,
        "Lattice Chern number: returns (flux rows, chern int, chern real)");
  m.def("hybrid_wannier_trace",
        [](const BlochModel& model, int n_kx, int n_ky) {
          auto trace = oracle::hybrid_wannier_trace(model, n_kx, n_ky);
          return py::make_tuple(trace.ky, trace.centers, trace.winding);
        },
        py::arg("model"), py::arg("n_kx") = 100, py::arg("n_ky") = 30);

  m.def("reconstruct_theta", &readout::reconstruct_theta, py::arg("p_cos0"), py::arg("p_sin0"));
  m.def("winding_number", &readout::winding_number, py::arg("centers"),
        py::arg("quantization_step") = 0.0);

  m.def("heisenberg_twist_phase",
        [](int n_sites, double coupling, int twisted_link, int n_theta, bool periodic,
           double twist_coupling) {
          pipeline::HeisenbergConfig cfg;
          cfg.n_sites = n_sites;
          cfg.coupling = coupling;
          cfg.twist_coupling = twist_coupling;
          cfg.twisted_link = twisted_link;
          cfg.n_theta = n_theta;
          cfg.periodic = periodic;
          auto record = pipeline::cmd_heisenberg(cfg);
          return py::make_tuple(record.gamma, record.quantized, record.residual);
        },
        py::arg("n_sites"), py::arg("coupling") = 1.0, py::arg("twisted_link") = 0,
        py::arg("n_theta") = 100, py::arg("periodic") = false, py::arg("twist_coupling") = 1.0,
        "Quantized ground-state Berry phase over one twist cycle: (gamma, nearest, residual)");

  m.def("flux", [](const py::kwargs& kwargs) {
          pipeline::RunConfig cfg = config_from_kwargs(kwargs);
          cfg.command = "flux";
          return json_to_py(pipeline::to_json(pipeline::cmd_flux(cfg)));
        },
        "Berry-flux grid and Chern number; keyword arguments mirror the CLI flags");
  m.def("wannier", [](const py::kwargs& kwargs) {
          pipeline::RunConfig cfg = config_from_kwargs(kwargs);
          cfg.command = "wannier";
          return json_to_py(pipeline::to_json(pipeline::cmd_wannier(cfg)));
        },
        "Hybrid Wannier centers and winding; keyword arguments mirror the CLI flags");
  m.def("sweep",
        [](const std::string& parameter, double from, double to, int points,
           const py::kwargs& kwargs) {
          pipeline::RunConfig cfg = config_from_kwargs(kwargs);
          cfg.command = "sweep";
          return json_to_py(pipeline::to_json(pipeline::cmd_sweep(cfg, parameter, from, to, points)));
        },
        py::arg("parameter"), py::arg("from_value"), py::arg("to_value"), py::arg("points"));

#ifdef CHERNSIM_VERSION
  m.attr("__version__") = CHERNSIM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
