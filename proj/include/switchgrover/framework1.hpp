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

// Stepwise mitigation: after every Grover iteration the two halves of the
// depolarizing noise are put through a quantum switch, the control is
// measured in the |+>/|-> basis and the |+> outcome is kept.

#pragma once

#include <cstddef>

#include "switchgrover/channels.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/qswitch.hpp"

namespace sg {

/// Weight of the ideal state in the post-selected |+> output at maximal
/// indefiniteness (theta = 1/2):
///   (((1 - sqrt t)/d)^2 + 2t) / ((1 + (t - 2 sqrt t)(1 - d^2))/d^2 + 1).
double f_xi(NoiseParams t, std::size_t d);

struct F1StepResult {
  DensityMatrix state;  // post-selected, normalized
  double branch_prob;
  /// Weight alpha of G rho G^dagger in the fit state = alpha G rho G^dagger +
  /// (1 - alpha) I/d. Zero when the rotated input is itself I/d.
  double f_value;
};

/// One iteration: rotate by G, switch the two D_sqrt(t) halves, keep |+>.
F1StepResult framework1_step(const DensityMatrix& rho_in, NoiseParams t, const ControlSpec& spec,
                             const GroverConfig& cfg, SwitchPath path = SwitchPath::kAuto);

/// f^k P(k, 0, d) + (1 - f^k)/d with f = f_xi(t, d).
double p_framework1(int k, NoiseParams t, std::size_t d);

/// k applications of framework1_step from the uniform state; returns the
/// marked-index population.
double p_framework1_sim(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg,
                        SwitchPath path = SwitchPath::kAuto);

/// The state after k steps (k = 0 gives the uniform state).
DensityMatrix framework1_state(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg,
                               SwitchPath path = SwitchPath::kAuto);

}  // namespace sg
