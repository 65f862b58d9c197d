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

#include <gtest/gtest.h>

#include <cmath>

#include "switchgrover/errors.hpp"
#include "switchgrover/hooks.hpp"
#include "switchgrover/oracle.hpp"

// Linked against the core layer only: any call into the framework libraries
// would fail to link.
namespace sg {
namespace {

constexpr double kNoisyK2Half16 = 0.27398681640625;
constexpr double kF1K1D4Quarter = 0.29203539823008845;
constexpr double kF1K1D16Quarter = 0.179850895844953;

TEST(SimulateNoisyGrover, Examples) {
  const GroverConfig cfg(3, 5);
  const ComplexMatrix g = grover_unitary(cfg);
  EXPECT_LT(max_abs_diff(oracle::simulate_noisy_grover(1, NoiseParams(1.0), cfg).mat(),
                         conjugate(g, uniform_state(8).mat())),
            1e-12);
  EXPECT_LT(max_abs_diff(oracle::simulate_noisy_grover(2, NoiseParams(0.0), GroverConfig(2, 1)).mat(), maximally_mixed(4)),
            1e-12);
  const GroverConfig c16(4, 9);
  const ComplexMatrix expected = 0.125 * ideal_state(3, c16).mat() + 0.875 * maximally_mixed(16);
  EXPECT_LT(max_abs_diff(oracle::simulate_noisy_grover(3, NoiseParams(0.5), c16).mat(), expected), 1e-12);
  EXPECT_NEAR(oracle::simulate_noisy_grover(2, NoiseParams(0.5), c16).population(9), kNoisyK2Half16, 1e-12);
}

TEST(SimulateNoisyGrover, Capacity) {
  EXPECT_THROW(oracle::simulate_noisy_grover(7, NoiseParams(0.5), GroverConfig(2, 0)), CapacityError);
  EXPECT_THROW(oracle::simulate_noisy_grover(1, NoiseParams(0.5), GroverConfig(5, 0)), CapacityError);
  EXPECT_THROW(oracle::simulate_framework(oracle::Framework::kDeferred, 7, NoiseParams(0.5), ControlSpec(),
                                          GroverConfig(1, 0)),
               CapacityError);
  EXPECT_THROW(oracle::simulate_framework(oracle::Framework::kStepwise, 1, NoiseParams(0.5), ControlSpec(),
                                          GroverConfig(5, 0)),
               CapacityError);
}

TEST(SimulateFramework, FirstIterationValues) {
  const double d4 =
      oracle::simulate_framework(oracle::Framework::kStepwise, 1, NoiseParams(0.25), ControlSpec(), GroverConfig(2, 0));
  EXPECT_NEAR(d4, kF1K1D4Quarter + (1.0 - kF1K1D4Quarter) / 4, 1e-12);
  const double d16 =
      oracle::simulate_framework(oracle::Framework::kStepwise, 1, NoiseParams(0.25), ControlSpec(), GroverConfig(4, 0));
  EXPECT_NEAR(d16, kF1K1D16Quarter, 1e-12);
}

TEST(SimulateFramework, ProtocolsCoincideAtFirstIteration) {
  for (int n : {1, 2, 4}) {
    for (int i = 0; i <= 10; ++i) {
      for (double theta : {0.5, 0.2, 0.0}) {
        const NoiseParams t(i / 10.0);
        const GroverConfig cfg(n, 0);
        EXPECT_NEAR(oracle::simulate_framework(oracle::Framework::kStepwise, 1, t, ControlSpec(theta), cfg),
                    oracle::simulate_framework(oracle::Framework::kDeferred, 1, t, ControlSpec(theta), cfg), 1e-12);
      }
    }
  }
}

TEST(SimulateFramework, ExplicitAndBlockwiseLiftingAgree) {
  // d = 4 uses explicit lifted Kraus pairs up to 32 dimensions; level 3 of
  // d = 4 (64 dimensions) switches to the blockwise action. Both must agree
  // with the stepwise protocol, which is identical to the deferred one.
  for (int k = 1; k <= 4; ++k) {
    const GroverConfig cfg(2, 0);
    EXPECT_NEAR(oracle::simulate_framework(oracle::Framework::kDeferred, k, NoiseParams(0.4), ControlSpec(), cfg),
                oracle::simulate_framework(oracle::Framework::kStepwise, k, NoiseParams(0.4), ControlSpec(), cfg), 1e-12);
  }
}

TEST(SimulateFramework, DeferredStateIsValid) {
  const DensityMatrix s = oracle::simulate_deferred_state(3, NoiseParams(0.3), ControlSpec(0.4), GroverConfig(2, 3));
  EXPECT_NEAR(s.trace(), 1.0, 1e-12);
  EXPECT_GE(min_eigenvalue(s.mat()), -1e-10);
  EXPECT_LT(max_abs_diff(oracle::simulate_deferred_state(0, NoiseParams(0.3), ControlSpec(), GroverConfig(2, 3)).mat(),
                         uniform_state(4).mat()),
            1e-15);
}

TEST(SimulateFramework, IndependentOfClosedFormPoison) {
  const GroverConfig cfg(2, 0);
  const double clean = oracle::simulate_framework(oracle::Framework::kDeferred, 2, NoiseParams(0.5), ControlSpec(), cfg);
  const double noisy = oracle::simulate_noisy_grover(2, NoiseParams(0.5), cfg).population(0);
  hooks::ScopedClosedFormPoison poison;
  EXPECT_EQ(oracle::simulate_framework(oracle::Framework::kDeferred, 2, NoiseParams(0.5), ControlSpec(), cfg), clean);
  EXPECT_EQ(oracle::simulate_noisy_grover(2, NoiseParams(0.5), cfg).population(0), noisy);
}

TEST(SimulateFramework, BitReproducible) {
  const GroverConfig cfg(4, 0);
  EXPECT_EQ(oracle::simulate_framework(oracle::Framework::kDeferred, 3, NoiseParams(0.7), ControlSpec(0.3), cfg),
            oracle::simulate_framework(oracle::Framework::kDeferred, 3, NoiseParams(0.7), ControlSpec(0.3), cfg));
}

}  // namespace
}  // namespace sg
