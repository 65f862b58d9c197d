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

#include "switchgrover/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "switchgrover/errors.hpp"
#include "switchgrover/hooks.hpp"

namespace sg {

GroverConfig::GroverConfig(int qubits, std::size_t marked) : qubits_(qubits), marked_(marked) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw DimensionError("GroverConfig: qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (marked >= dim()) {
    throw DomainError("GroverConfig: marked index " + std::to_string(marked) + " outside [0, " +
                      std::to_string(dim()) + ")");
  }
}

double grover_angle(std::size_t d) {
  if (d < 1) throw DomainError("grover_angle: d must be positive");
  return std::asin(1.0 / std::sqrt(static_cast<double>(d)));
}

DensityMatrix uniform_state(std::size_t d) {
  if (d < 2) throw DomainError("uniform_state: d must be at least 2");
  return DensityMatrix(ComplexMatrix::Constant(d, d, Complex(1.0 / static_cast<double>(d))));
}

ComplexMatrix phase_oracle(const GroverConfig& cfg) {
  return identity(cfg.dim()) - 2.0 * basis_projector(cfg.dim(), cfg.marked());
}

ComplexMatrix grover_unitary(const GroverConfig& cfg, DiffusionSign sign) {
  const auto d = cfg.dim();
  const ComplexMatrix psi_psi = ComplexMatrix::Constant(d, d, Complex(1.0 / static_cast<double>(d)));
  ComplexMatrix diffusion = 2.0 * psi_psi - identity(d);
  if (sign == DiffusionSign::kNegated) diffusion = -diffusion;
  return diffusion * phase_oracle(cfg);
}

DensityMatrix ideal_state(int k, const GroverConfig& cfg) {
  if (k < 0) throw DomainError("ideal_state: k must be non-negative");
  const ComplexMatrix g = grover_unitary(cfg);
  ComplexMatrix rho = uniform_state(cfg.dim()).mat();
  for (int i = 0; i < k; ++i) rho = conjugate(g, rho);
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

double ideal_success_probability(int k, std::size_t d) {
  if (k < 0) throw DomainError("ideal_success_probability: k must be non-negative");
  const double s = std::sin((2.0 * k + 1.0) * grover_angle(d));
  return hooks::closed_form_result(s * s);
}

int optimal_iterations(std::size_t d) {
  if (d < 2) throw DomainError("optimal_iterations: d must be at least 2");
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(d))));
}

DensityMatrix noisy_state(int k, NoiseParams t, const GroverConfig& cfg) {
  const double weight = std::pow(t.t(), k);
  ComplexMatrix rho = weight * ideal_state(k, cfg).mat() + (1.0 - weight) * maximally_mixed(cfg.dim());
  return DensityMatrix(std::move(rho));
}

double noisy_success_probability(int k, NoiseParams t, std::size_t d) {
  if (k < 0) throw DomainError("noisy_success_probability: k must be non-negative");
  const double weight = std::pow(t.t(), k);
  const double s = std::sin((2.0 * k + 1.0) * grover_angle(d));
  return hooks::closed_form_result((1.0 - weight) / static_cast<double>(d) + weight * s * s);
}

double noisy_success_probability_sim(int k, NoiseParams t, const GroverConfig& cfg) {
  if (k < 0) throw DomainError("noisy_success_probability_sim: k must be non-negative");
  const KrausChannel noise = depolarizing_kraus(t, KrausSplit::kPlain, cfg.dim());
  const ComplexMatrix g = grover_unitary(cfg);
  DensityMatrix rho = uniform_state(cfg.dim());
  for (int i = 0; i < k; ++i) {
    rho = apply_kraus(noise, DensityMatrix(conjugate(g, rho.mat())));
  }
  return rho.population(cfg.marked());
}

double noisy_success_probability_sim_averaged(int k, NoiseParams t, int qubits) {
  const std::size_t d = std::size_t{1} << qubits;
  double acc = 0.0;
  for (std::size_t x = 0; x < d; ++x) {
    acc += noisy_success_probability_sim(k, t, GroverConfig(qubits, x));
  }
  return acc / static_cast<double>(d);
}

}  // namespace sg
