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
#include "switchgrover/grover.hpp"
#include "switchgrover/qmath.hpp"
#include "switchgrover/qswitch.hpp"

// Brute-force reference evolution. Built only on the core layer: nothing here
// may call a closed-form probability function.
namespace sg::oracle {

inline constexpr int kMaxIterations = 6;
inline constexpr std::size_t kMaxDim = 16;
/// Largest lifted register for which the deferred protocol uses explicit Kraus pairs.
inline constexpr std::size_t kMaxExplicitLiftedDim = 32;

/// Alternates conjugation by G with the full (d^2 + 1)-term Kraus sum of D_t.
/// Throws CapacityError for d > 16 or k > 6.
DensityMatrix simulate_noisy_grover(int k, NoiseParams t, const GroverConfig& cfg);

enum class Framework {
  kStepwise,  // switch, measure and post-select after every iteration
  kDeferred,  // fresh control per iteration, joint |+>^k measurement at the end
};

/// Success probability of the switched protocol. Explicit Kraus pairs are used
/// for d <= 4; larger d goes through the closed-form switch action.
double simulate_framework(Framework framework, int k, NoiseParams t, const ControlSpec& spec,
                          const GroverConfig& cfg);

/// Post-selected search-register state of the deferred protocol.
DensityMatrix simulate_deferred_state(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg);

}  // namespace sg::oracle
