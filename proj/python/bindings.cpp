// Copyright 2026 The TrotterLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trotterlab/analytics.hpp"
#include "trotterlab/config.hpp"
#include "trotterlab/dense_sim.hpp"
#include "trotterlab/errors.hpp"
#include "trotterlab/output.hpp"
#include "trotterlab/recipes.hpp"
#include "trotterlab/subspace_sim.hpp"
#include "trotterlab/sweep.hpp"
#include "trotterlab/verify.hpp"

namespace py = pybind11;
using namespace trotterlab;

namespace {

std::string sweep_json(const std::string& config, int threads) {
  const RunConfig parsed = parse_run_config(nlohmann::json::parse(config));
  ExperimentOutput output;
  output.label = std::string(to_string(parsed.experiment.kind));
  for (const SweepSpec& spec : expand_series(parsed)) {
    output.series.push_back(run_sweep(spec, threads));
  }
  return to_json(output).dump();
}

}  // namespace

PYBIND11_MODULE(_trotterlab, m) {
  m.doc() = "Trotterized XY-chain simulator";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<UnsupportedMapping>(m, "UnsupportedMapping", PyExc_NotImplementedError);
  py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_local_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::enum_<GateFamily>(m, "GateFamily").value("XY", GateFamily::XY).value("CRX", GateFamily::CRX);
  py::enum_<AngleConvention>(m, "AngleConvention")
      .value("HOP", AngleConvention::Hop)
      .value("HAMILTONIAN", AngleConvention::Hamiltonian);

  py::class_<ZLayerSpec>(m, "ZLayerSpec")
      .def(py::init<>())
      .def_readwrite("base_phi", &ZLayerSpec::base_phi)
      .def_readwrite("sign_pattern", &ZLayerSpec::sign_pattern)
      .def_readwrite("disorder_radius", &ZLayerSpec::disorder_radius)
      .def_readwrite("explicit_phis", &ZLayerSpec::explicit_phis);

  py::class_<TrotterCircuitSpec>(m, "TrotterCircuitSpec")
      .def(py::init<>())
      .def_readwrite("n_qubits", &TrotterCircuitSpec::n_qubits)
      .def_readwrite("n_steps", &TrotterCircuitSpec::n_steps)
      .def_readwrite("family", &TrotterCircuitSpec::family)
      .def_readwrite("bond_angles", &TrotterCircuitSpec::bond_angles)
      .def_readwrite("z_layer", &TrotterCircuitSpec::z_layer)
      .def_readwrite("drop_final_z", &TrotterCircuitSpec::drop_final_z)
      .def_readwrite("initial_excitation_site", &TrotterCircuitSpec::initial_excitation_site)
      .def_readwrite("convention", &TrotterCircuitSpec::convention);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init<>())
      .def(py::init([](std::vector<double> j, std::vector<double> v) {
             return ChainSpec{std::move(j), std::move(v)};
           }),
           py::arg("couplings"), py::arg("potentials"))
      .def_readwrite("couplings", &ChainSpec::couplings)
      .def_readwrite("potentials", &ChainSpec::potentials);

  m.def("realize_z_layer", &realize_z_layer, py::arg("spec"), py::arg("n_qubits"),
        py::arg("seed") = 0);
  m.def(
      "build_circuit",
      [](const TrotterCircuitSpec& spec, std::uint64_t seed) {
        std::vector<std::string> out;
        for (const GateOp& g : build_circuit(spec, seed)) out.push_back(describe(g));
        return out;
      },
      py::arg("spec"), py::arg("seed") = 0);
  m.def("chain_from_circuit", &chain_from_circuit, py::arg("spec"), py::arg("tau"),
        py::arg("seed") = 0);
  m.def("circuit_from_chain", &circuit_from_chain, py::arg("chain"), py::arg("tau"),
        py::arg("n_steps"));

  m.def(
      "dense_occupation",
      [](const TrotterCircuitSpec& spec, std::uint64_t seed) {
        py::gil_scoped_release release;
        return occupation_probs(run_circuit(spec, seed));
      },
      py::arg("spec"), py::arg("seed") = 0);
  m.def(
      "subspace_probabilities",
      [](const TrotterCircuitSpec& spec, int eta, std::uint64_t seed) {
        return run_discrete(spec, eta, seed).probabilities();
      },
      py::arg("spec"), py::arg("eta"), py::arg("seed") = 0);
  m.def(
      "continuous_probabilities",
      [](const ChainSpec& chain, double t, int init_site) {
        return continuous_evolve(chain, t, init_site).probabilities();
      },
      py::arg("chain"), py::arg("t"), py::arg("init_site") = 1);
  m.def("resonance_chain", &resonance_chain, py::arg("n"), py::arg("j1"), py::arg("j2"),
        py::arg("v1"), py::arg("v2"));
  m.def(
      "convergence_study",
      [](const ChainSpec& chain, double t, const std::vector<int>& n_ts) {
        std::vector<std::pair<int, double>> out;
        for (const ConvergenceRow& r : convergence_study(chain, t, n_ts)) {
          out.emplace_back(r.n_t, r.distance);
        }
        return out;
      },
      py::arg("chain"), py::arg("t"), py::arg("n_t_list"));

  m.def("p01_closed_form", &p01_closed_form, py::arg("theta"), py::arg("phi"), py::arg("alpha"));
  m.def("p001_closed_form", &p001_closed_form, py::arg("theta"), py::arg("phi"), py::arg("alpha"));
  m.def(
      "ipr", [](const std::vector<double>& probs) { return ipr_from_probs(probs); },
      py::arg("probs"));
  m.def(
      "tail_prob", [](const std::vector<double>& probs) { return tail_prob(probs); },
      py::arg("probs"));
  m.def(
      "find_peaks",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double min_prominence) {
        std::vector<std::tuple<double, double, double>> out;
        for (const Peak& p : find_peaks(xs, ys, min_prominence)) {
          out.emplace_back(p.position, p.height, p.prominence);
        }
        return out;
      },
      py::arg("xs"), py::arg("ys"), py::arg("min_prominence") = kDefaultPeakProminence);

  m.def(
      "run_sweep_json",
      [](const std::string& config, int threads) {
        py::gil_scoped_release release;
        return sweep_json(config, threads);
      },
      py::arg("config"), py::arg("threads") = 1);
  m.def(
      "run_figure_json",
      [](const std::string& id, int threads, std::optional<std::uint64_t> seed) {
        py::gil_scoped_release release;
        return to_json(run_figure(id, threads, seed)).dump();
      },
      py::arg("figure_id"), py::arg("threads") = 1, py::arg("seed") = py::none());
  m.def("figure_ids", &figure_ids);
  m.def("verify", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const SuiteResult& s : run_verification().suites) out.emplace_back(s.name, s.passed, s.detail);
    return out;
  });
}
