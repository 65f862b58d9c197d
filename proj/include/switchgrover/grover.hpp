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

#pragma once

#include <cstddef>

#include "switchgrover/channels.hpp"
#include "switchgrover/qmath.hpp"

namespace sg {

/// Search register of n qubits with a single marked basis index.
class GroverConfig {
 public:
  /// Throws DimensionError for n outside [1, kMaxQubits], DomainError for
  /// marked >= 2^n.
  GroverConfig(int qubits, std::size_t marked);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return std::size_t{1} << qubits_; }
  std::size_t marked() const { return marked_; }

 private:
  int qubits_;
  std::size_t marked_;
};

/// Rotation angle arcsin(1/sqrt(d)) of one Grover iteration (half of it).
/// Distinct from the control-qubit amplitude used by the switch modules.
double grover_angle(std::size_t d);

/// Sign convention of the diffusion operator. Both differ by a global
/// phase and give identical density matrices.
enum class DiffusionSign {
  kReflectAboutMean,  // 2|psi><psi| - I
  kNegated,           // I - 2|psi><psi|
};

/// |psi><psi| with psi the uniform superposition. Throws DomainError for d < 2.
DensityMatrix uniform_state(std::size_t d);

/// Phase oracle I - 2|x><x|.
ComplexMatrix phase_oracle(const GroverConfig& cfg);
/// Diffusion times oracle.
ComplexMatrix grover_unitary(const GroverConfig& cfg,
                             DiffusionSign sign = DiffusionSign::kReflectAboutMean);

/// G^k rho(0) G^dagger^k.
DensityMatrix ideal_state(int k, const GroverConfig& cfg);

/// sin^2((2k + 1) arcsin(1/sqrt d)).
double ideal_success_probability(int k, std::size_t d);

/// floor(pi/4 sqrt(d)).
int optimal_iterations(std::size_t d);

/// t^k rho(k) + (1 - t^k) I/d.
DensityMatrix noisy_state(int k, NoiseParams t, const GroverConfig& cfg);

/// (1 - t^k)/d + t^k sin^2((2k + 1) arcsin(1/sqrt d)).
double noisy_success_probability(int k, NoiseParams t, std::size_t d);

/// <x|(D_t G_x)^k(|psi><psi|)|x> for the configured marked index, with D_t
/// applied as an explicit Kraus sum.
double noisy_success_probability_sim(int k, NoiseParams t, const GroverConfig& cfg);

/// The same simulation averaged over every marked index x in [0, d).
double noisy_success_probability_sim_averaged(int k, NoiseParams t, int qubits);

}  // namespace sg
