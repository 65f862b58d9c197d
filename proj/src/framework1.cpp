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

#include "switchgrover/framework1.hpp"

#include <cmath>

#include "switchgrover/errors.hpp"
#include "switchgrover/hooks.hpp"

namespace sg {

double f_xi(NoiseParams t, std::size_t d) {
  if (d < 2) throw DomainError("f_xi: d must be at least 2");
  const double s = std::sqrt(t.t());
  const double dd = static_cast<double>(d);
  const double num = std::pow((1.0 - s) / dd, 2) + 2.0 * t.t();
  const double den = (1.0 + (t.t() - 2.0 * s) * (1.0 - dd * dd)) / (dd * dd) + 1.0;
  return hooks::closed_form_result(num / den);
}

F1StepResult framework1_step(const DensityMatrix& rho_in, NoiseParams t, const ControlSpec& spec,
                             const GroverConfig& cfg, SwitchPath path) {
  if (rho_in.dim() != cfg.dim()) throw DimensionError("framework1_step: state dimension mismatch");
  const ComplexMatrix rotated = conjugate(grover_unitary(cfg), rho_in.mat());
  const DensityMatrix rho(0.5 * (rotated + rotated.adjoint()));
  const JointState joint = switch_depolarizing(rho, spec, t, path);
  ConditionalState plus = measure_control(joint, Branch::kPlus);
  const AffineFit fit = affine_fit(plus.state.mat(), rho.mat());
  return {std::move(plus.state), plus.probability, fit.alpha};
}

double p_framework1(int k, NoiseParams t, std::size_t d) {
  if (k < 0) throw DomainError("p_framework1: k must be non-negative");
  const double fk = std::pow(f_xi(t, d), k);
  return hooks::closed_form_result(fk * ideal_success_probability(k, d) + (1.0 - fk) / static_cast<double>(d));
}

DensityMatrix framework1_state(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg,
                               SwitchPath path) {
  if (k < 0) throw DomainError("framework1_state: k must be non-negative");
  DensityMatrix rho = uniform_state(cfg.dim());
  for (int i = 0; i < k; ++i) rho = framework1_step(rho, t, spec, cfg, path).state;
  return rho;
}

double p_framework1_sim(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg,
                        SwitchPath path) {
  return framework1_state(k, t, spec, cfg, path).population(cfg.marked());
}

}  // namespace sg
