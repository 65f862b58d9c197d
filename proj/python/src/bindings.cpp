// Copyright 2026 The switchgrover Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "switchgrover/framework1.hpp"
#include "switchgrover/framework2.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/oracle.hpp"
#include "switchgrover/sweep.hpp"
#include "switchgrover/verify.hpp"

namespace py = pybind11;

namespace {

sg::GroverConfig config(int n, std::size_t marked) { return sg::GroverConfig(n, marked); }

py::dict row_to_dict(const sg::sweep::SweepRow& r) {
  py::dict d;
  d["d"] = r.d;
  d["k"] = r.k;
  d["one_minus_t"] = r.one_minus_t;
  d["theta"] = r.theta;
  d["p_ideal"] = r.p_ideal;
  d["p_noisy"] = r.p_noisy ? py::cast(*r.p_noisy) : py::none();
  d["p_f1"] = r.p_f1 ? py::cast(*r.p_f1) : py::none();
  d["p_f2"] = r.p_f2 ? py::cast(*r.p_f2) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noisy Grover search with quantum-switch error mitigation";

  m.def("ideal_success_probability", &sg::ideal_success_probability, py::arg("k"), py::arg("d"));
  m.def("optimal_iterations", &sg::optimal_iterations, py::arg("d"));
  m.def(
      "noisy_success_probability",
      [](int k, double t, std::size_t d) { return sg::noisy_success_probability(k, sg::NoiseParams(t), d); },
      py::arg("k"), py::arg("t"), py::arg("d"));
  m.def(
      "noisy_state",
      [](int k, double t, int n, std::size_t marked) {
        return sg::noisy_state(k, sg::NoiseParams(t), config(n, marked)).mat();
      },
      py::arg("k"), py::arg("t"), py::arg("n"), py::arg("marked") = 0);
  m.def(
      "f_xi", [](double t, std::size_t d) { return sg::f_xi(sg::NoiseParams(t), d); }, py::arg("t"), py::arg("d"));
  m.def(
      "p_framework1", [](int k, double t, std::size_t d) { return sg::p_framework1(k, sg::NoiseParams(t), d); },
      py::arg("k"), py::arg("t"), py::arg("d"));
  m.def(
      "p_framework1_sim",
      [](int k, double t, double theta, int n, std::size_t marked) {
        return sg::p_framework1_sim(k, sg::NoiseParams(t), sg::ControlSpec(theta), config(n, marked));
      },
      py::arg("k"), py::arg("t"), py::arg("theta") = 0.5, py::arg("n") = 4, py::arg("marked") = 0);
  m.def(
      "framework1_state",
      [](int k, double t, double theta, int n, std::size_t marked) {
        return sg::framework1_state(k, sg::NoiseParams(t), sg::ControlSpec(theta), config(n, marked)).mat();
      },
      py::arg("k"), py::arg("t"), py::arg("theta") = 0.5, py::arg("n") = 4, py::arg("marked") = 0);
  m.def(
      "p_framework2_sim",
      [](int k, double t, double theta, int n, std::size_t marked) {
        return sg::p_framework2_sim(k, sg::NoiseParams(t), sg::ControlSpec(theta), config(n, marked));
      },
      py::arg("k"), py::arg("t"), py::arg("theta") = 0.5, py::arg("n") = 4, py::arg("marked") = 0);
  m.def(
      "p_framework2_symbolic",
      [](int k, double t, double theta, std::size_t d) {
        return sg::p_framework2_symbolic(k, sg::NoiseParams(t), sg::ControlSpec(theta), d);
      },
      py::arg("k"), py::arg("t"), py::arg("theta") = 0.5, py::arg("d") = 16);
  m.def(
      "p_framework2_closed", [](int k, double t, std::size_t d) { return sg::p_framework2_closed(k, sg::NoiseParams(t), d); },
      py::arg("k"), py::arg("t"), py::arg("d"));
  m.def(
      "oracle_framework",
      [](const std::string& framework, int k, double t, double theta, int n, std::size_t marked) {
        if (framework != "f1" && framework != "f2") throw std::invalid_argument("framework must be 'f1' or 'f2'");
        const auto fw = framework == "f1" ? sg::oracle::Framework::kStepwise : sg::oracle::Framework::kDeferred;
        return sg::oracle::simulate_framework(fw, k, sg::NoiseParams(t), sg::ControlSpec(theta), config(n, marked));
      },
      py::arg("framework"), py::arg("k"), py::arg("t"), py::arg("theta") = 0.5, py::arg("n") = 4,
      py::arg("marked") = 0);

  m.def(
      "sweep",
      [](int n, std::vector<int> k_list, int noise_points, double theta, const std::string& frameworks) {
        sg::sweep::SweepConfig cfg;
        cfg.n = n;
        cfg.k_list = std::move(k_list);
        cfg.noise_points = noise_points;
        cfg.theta = theta;
        sg::sweep::set_frameworks(cfg, frameworks);
        py::list out;
        for (const auto& r : sg::sweep::run_sweep(cfg)) out.append(row_to_dict(r));
        return out;
      },
      py::arg("n") = 4, py::arg("k_list") = std::vector<int>{1, 2, 3}, py::arg("noise_points") = 101,
      py::arg("theta") = 0.5, py::arg("frameworks") = "none,f1,f2");

  m.def(
      "verify",
      [](const std::string& preset) {
        const sg::verify::VerifyGrid grid = sg::verify::preset(preset);
        std::vector<sg::verify::VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = sg::verify::verify_all(grid);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["case_id"] = r.case_id;
          d["max_abs_error"] = r.max_abs_error;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          d["lhs_source"] = r.lhs_source;
          d["rhs_source"] = r.rhs_source;
          d["seed"] = r.seed;
          out.append(d);
        }
        return out;
      },
      py::arg("preset") = "quick");
}
