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
#include <string>

#include "switchgrover/errors.hpp"
#include "switchgrover/framework1.hpp"
#include "switchgrover/framework2.hpp"
#include "switchgrover/oracle.hpp"

namespace sg {
namespace {

constexpr double kRhoCoefficientK2D4Quarter = 0.0852846738194064;
constexpr double kProbabilityK2D4Quarter = 0.77935791015625;
constexpr double kK3Half16 = 0.190706347245944;
constexpr double kK3Half16Display = 0.258937515147832;

TEST(FRCoefficients, Examples) {
  const FRCoefficients one = fr_coefficients(NoiseParams(1.0), 16);
  EXPECT_DOUBLE_EQ(one.f_rho, 1.0);
  EXPECT_DOUBLE_EQ(one.f_id, 0.0);
  EXPECT_DOUBLE_EQ(one.r_rho, 1.0);
  EXPECT_DOUBLE_EQ(one.r_id, 0.0);
  const FRCoefficients zero = fr_coefficients(NoiseParams(0.0), 16);
  EXPECT_DOUBLE_EQ(zero.f_rho, 0.0);
  EXPECT_DOUBLE_EQ(zero.f_id, 1.0);
  EXPECT_DOUBLE_EQ(zero.r_rho, 1.0 / 256);
  EXPECT_DOUBLE_EQ(zero.r_id, 0.0);
  const FRCoefficients q = fr_coefficients(NoiseParams(0.25), 16);
  EXPECT_DOUBLE_EQ(q.f_rho, 0.25);
  EXPECT_DOUBLE_EQ(q.f_id, 0.75);
  EXPECT_DOUBLE_EQ(q.r_rho, 0.2509765625);
  EXPECT_DOUBLE_EQ(q.r_id, 0.5);
}

TEST(FRCoefficients, Invariants) {
  for (std::size_t d : {2u, 4u, 16u}) {
    for (int i = 0; i <= 20; ++i) {
      const double t = i / 20.0;
      const FRCoefficients c = fr_coefficients(NoiseParams(t), d);
      EXPECT_EQ(c.f_rho + c.f_id, 1.0);
      const double s = std::sqrt(t);
      EXPECT_NEAR(c.r_rho + c.r_id, std::pow((1 - s) / d, 2) + t + 2 * s * (1 - s), 1e-15);
      for (double v : {c.f_rho, c.f_id, c.r_rho, c.r_id}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0 + 1.0 / (d * d));
      }
    }
  }
}

TEST(FRMaps, Examples) {
  const FRCoefficients c = fr_coefficients(NoiseParams(0.3), 4);
  EXPECT_LT(max_abs_diff(f_map(maximally_mixed(4), c), maximally_mixed(4)), 1e-15);
  const ComplexMatrix rho = random_density(4, 1);
  EXPECT_LT(max_abs_diff(r_map(rho, fr_coefficients(NoiseParams(1.0), 4)), rho), 1e-15);
  const ComplexMatrix m = random_matrix(4, 2);
  EXPECT_NEAR(std::abs(f_map(m, c).trace() - m.trace()), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r_map(m, c).trace() - (c.r_rho + c.r_id) * m.trace()), 0.0, 1e-12);
  EXPECT_THROW(f_map(zeros(2, 3), c), DimensionError);
}

TEST(FRMaps, CompositionsStayAffine) {
  const FRCoefficients c = fr_coefficients(NoiseParams(0.35), 4);
  const ComplexMatrix rho = random_density(4, 3);
  const AffineFit fr = affine_fit(f_map(r_map(rho, c), c), rho);
  const AffineFit rf = affine_fit(r_map(f_map(rho, c), c), rho);
  EXPECT_LT(fr.residual, 1e-12);
  EXPECT_LT(rf.residual, 1e-12);
  EXPECT_NEAR(fr.alpha, c.f_rho * c.r_rho, 1e-12);
  EXPECT_NEAR(fr.beta, c.f_rho * c.r_id + c.f_id * (c.r_rho + c.r_id), 1e-12);
  EXPECT_NEAR(rf.alpha, c.r_rho * c.f_rho, 1e-12);
  EXPECT_NEAR(rf.beta, c.r_rho * c.f_id + c.r_id, 1e-12);

  // The symbolic evaluator's two-level words carry the same coefficients.
  const SymbolicF2 s = SymbolicF2(ControlSpec()).grown(NoiseParams(0.35), 4).grown(NoiseParams(0.35), 4);
  const SymbolicF2::Entry& e = s.at(0, 2);  // outer control off-diagonal, inner diagonal
  EXPECT_EQ(e.word, "RF");
  EXPECT_NEAR(e.alpha, 0.5 * 0.5 * rf.alpha, 1e-15);
  EXPECT_NEAR(e.beta, 0.5 * 0.5 * rf.beta, 1e-15);
}

TEST(Grow, NoiselessFactorizes) {
  const GroverConfig cfg(2, 1);
  const ControlSpec spec(0.3);
  const F2State one = grow(framework2_initial(cfg, spec), NoiseParams(1.0), cfg);
  const ComplexMatrix g = grover_unitary(cfg);
  const ComplexMatrix rho1 = conjugate(g, uniform_state(4).mat());
  EXPECT_LT(max_abs_diff(one.block().mat(), kron(control_state(spec).mat(), rho1)), 1e-12);
  const F2State two = grow(one, NoiseParams(1.0), cfg);
  const ComplexMatrix lifted = conjugate(kron(identity(2), g), one.block().mat());
  EXPECT_LT(max_abs_diff(two.block().mat(), kron(control_state(spec).mat(), lifted)), 1e-12);
}

TEST(Grow, FirstLevelIsTheSwitch) {
  const GroverConfig cfg(4, 3);
  const ControlSpec spec(0.4);
  const F2State one = grow(framework2_initial(cfg, spec), NoiseParams(0.6), cfg);
  const DensityMatrix rotated(conjugate(grover_unitary(cfg), uniform_state(16).mat()));
  EXPECT_LT(max_abs_diff(one.block().mat(), apply_switch_closed_form(rotated, spec, NoiseParams(0.6)).mat()), 1e-12);
}

TEST(Grow, SecondLevelMatchesExplicitLiftedKraus) {
  const GroverConfig cfg(2, 0);
  const ControlSpec spec(0.5);
  const NoiseParams t(0.5);
  const F2State one = grow(framework2_initial(cfg, spec), t, cfg);
  const F2State two = grow(one, t, cfg);
  const KrausChannel half = depolarizing_kraus(t, KrausSplit::kSqrtSplit, 4);
  std::vector<ComplexMatrix> ops;
  for (const auto& k : half.ops()) ops.push_back(kron(identity(2), k));
  const KrausChannel lifted(ops, "lifted");
  const DensityMatrix rotated(conjugate(kron(identity(2), grover_unitary(cfg)), one.block().mat()));
  const JointState brute = apply_switch(rotated, spec, switch_kraus(lifted, lifted));
  EXPECT_LT(max_abs_diff(two.block().mat(), brute.mat()), 1e-10);
}

TEST(Grow, TracePreservedAndBlocksAffine) {
  const GroverConfig cfg(4, 2);
  const auto traj = framework2_trajectory(3, NoiseParams(0.45), ControlSpec(0.3), cfg);
  ASSERT_EQ(traj.size(), 4u);
  for (int k = 0; k <= 3; ++k) {
    const BlockState& b = traj[k].block();
    EXPECT_EQ(traj[k].iterations(), k);
    EXPECT_EQ(b.mat().rows(), static_cast<Eigen::Index>((1u << k) * 16));
    EXPECT_NEAR(std::abs(b.mat().trace() - 1.0), 0.0, 1e-12);
    const ComplexMatrix ideal = ideal_state(k, cfg).mat();
    for (std::size_t i = 0; i < b.grid(); ++i) {
      for (std::size_t j = 0; j < b.grid(); ++j) EXPECT_LT(affine_fit(b.block(i, j), ideal).residual, 1e-10);
    }
  }
}

TEST(Grow, Capacity) {
  const GroverConfig small(1, 0);
  F2State s = framework2_initial(small, ControlSpec());
  for (int i = 0; i < kMaxSwitchLevels; ++i) s = grow(s, NoiseParams(0.5), small);
  EXPECT_THROW(grow(s, NoiseParams(0.5), small), CapacityError);
  const GroverConfig wide(6, 0);
  const auto traj = framework2_trajectory(4, NoiseParams(0.5), ControlSpec(), wide);
  EXPECT_THROW(grow(traj.back(), NoiseParams(0.5), wide), CapacityError);
  EXPECT_THROW(grow(framework2_initial(small, ControlSpec()), NoiseParams(0.5), GroverConfig(2, 0)), DimensionError);
  EXPECT_THROW(framework2_trajectory(-1, NoiseParams(0.5), ControlSpec(), small), DomainError);
}

TEST(MeasureAllPlus, NoiselessFirstLevel) {
  const GroverConfig cfg(3, 4);
  const auto traj = framework2_trajectory(1, NoiseParams(1.0), ControlSpec(), cfg);
  const PostSelected p = measure_all_plus(traj.back());
  EXPECT_NEAR(p.probability, 1.0, 1e-12);
  EXPECT_LT(max_abs_diff(p.state.mat(), ideal_state(1, cfg).mat()), 1e-12);
  EXPECT_THROW(measure_all_plus(traj.front()), DomainError);
}

TEST(MeasureAllPlus, SecondLevelCoefficientAtFour) {
  const GroverConfig cfg(2, 1);
  const NoiseParams t(0.25);
  const auto traj = framework2_trajectory(2, t, ControlSpec(), cfg);
  const PostSelected p = measure_all_plus(traj.back());
  EXPECT_NEAR(p.probability, kProbabilityK2D4Quarter, 1e-12);
  const AffineFit fit = affine_fit(p.state.mat(), ideal_state(2, cfg).mat());
  EXPECT_NEAR(fit.alpha, kRhoCoefficientK2D4Quarter, 1e-10);
  const AffineWeights resolved = framework2_k2_expression(t, 4, ControlSpec(), K2Grouping::kResolved);
  EXPECT_NEAR(resolved.rho_coefficient, kRhoCoefficientK2D4Quarter, 1e-12);
  EXPECT_NEAR(resolved.rho_coefficient + resolved.mixed_coefficient, 1.0, 1e-15);
  // The as-typeset grouping does not reproduce the simulated state.
  const AffineWeights typeset = framework2_k2_expression(t, 4, ControlSpec(), K2Grouping::kAsTypeset);
  EXPECT_GT(std::abs(typeset.rho_coefficient - kRhoCoefficientK2D4Quarter), 1e-3);
}

TEST(MeasureAllPlus, RecursionMatchesDirectProjection) {
  for (int n : {1, 2}) {
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double theta : {0.5, 0.2}) {
        const GroverConfig cfg(n, 0);
        const auto traj = framework2_trajectory(3, NoiseParams(t), ControlSpec(theta), cfg);
        for (int k = 1; k <= 3; ++k) {
          const std::vector<F2State> prefix(traj.begin(), traj.begin() + k + 1);
          EXPECT_LT(max_abs_diff(project_all_plus(prefix.back()), project_all_plus_recursive(prefix, NoiseParams(t), cfg)),
                    1e-10);
        }
      }
    }
  }
  const GroverConfig cfg(2, 0);
  const auto traj = framework2_trajectory(3, NoiseParams(0.5), ControlSpec(), cfg);
  EXPECT_LT(max_abs_diff(project_all_plus(traj.back()), project_all_plus_recursive(traj, NoiseParams(0.5), cfg)), 1e-10);
  EXPECT_THROW(project_all_plus_recursive({traj.front()}, NoiseParams(0.5), cfg), DomainError);
}

TEST(Symbolic, BlockCountAndWords) {
  SymbolicF2 s{ControlSpec()};
  EXPECT_EQ(s.block_count(), 1u);
  for (int k = 1; k <= kMaxSwitchLevels; ++k) {
    s = s.grown(NoiseParams(0.5), 16);
    EXPECT_EQ(s.block_count(), std::size_t{1} << (2 * k));
    EXPECT_EQ(s.at(0, 0).word, std::string(static_cast<std::size_t>(k), 'F'));
    EXPECT_EQ(s.at(0, s.grid() - 1).word, std::string(static_cast<std::size_t>(k), 'R'));
  }
  EXPECT_THROW(s.grown(NoiseParams(0.5), 16), CapacityError);
  EXPECT_THROW(symbolic_measure_all_plus(SymbolicF2(ControlSpec())), DomainError);
}

TEST(Symbolic, MatchesDenseRegister) {
  for (int n : {1, 2, 4}) {
    for (int k = 0; k <= 3; ++k) {
      for (double t : {0.0, 0.3, 0.5, 0.9, 1.0}) {
        for (double theta : {0.5, 0.1, 1.0}) {
          const GroverConfig cfg(n, 0);
          EXPECT_NEAR(p_framework2_sim(k, NoiseParams(t), ControlSpec(theta), cfg),
                      p_framework2_symbolic(k, NoiseParams(t), ControlSpec(theta), cfg.dim()), 1e-10);
        }
      }
    }
  }
  const SymbolicMeasurement m =
      symbolic_measure_all_plus(SymbolicF2(ControlSpec()).grown(NoiseParams(0.25), 4).grown(NoiseParams(0.25), 4));
  EXPECT_NEAR(m.rho_coefficient, kRhoCoefficientK2D4Quarter, 1e-12);
  EXPECT_NEAR(m.probability, kProbabilityK2D4Quarter, 1e-12);
}

TEST(Symbolic, ReachesSixLevelsAtSixteen) {
  const double p = p_framework2_symbolic(6, NoiseParams(0.8), ControlSpec(), 16);
  EXPECT_GE(p, 0.0);
  EXPECT_LE(p, 1.0);
  EXPECT_NEAR(p, p_framework1(6, NoiseParams(0.8), 16), 1e-12);
}

TEST(PFramework2Closed, Examples) {
  EXPECT_NEAR(p_framework2_closed(1, NoiseParams(1.0), 16), ideal_success_probability(1, 16), 1e-15);
  EXPECT_NEAR(p_framework2_closed(1, NoiseParams(1.0), 16), p_framework1(1, NoiseParams(1.0), 16), 1e-15);
  EXPECT_NEAR(p_framework2_closed(2, NoiseParams(1.0), 16), ideal_success_probability(2, 16), 1e-15);
  EXPECT_NEAR(p_framework2_closed(3, NoiseParams(1.0), 16), ideal_success_probability(3, 16), 1e-15);
  EXPECT_THROW(p_framework2_closed(0, NoiseParams(0.5), 16), UnsupportedError);
  EXPECT_THROW(p_framework2_closed(4, NoiseParams(0.5), 16), UnsupportedError);
}

TEST(PFramework2Closed, FirstIterationMatchesSimulation) {
  for (int i = 0; i <= 20; ++i) {
    const NoiseParams t(i / 20.0);
    EXPECT_NEAR(p_framework2_closed(1, t, 16), p_framework2_sim(1, t, ControlSpec(), GroverConfig(4, 0)), 1e-12);
  }
}

TEST(PFramework2Closed, ThirdIterationDisplayIsAClaimUnderTest) {
  const NoiseParams t(0.5);
  const double sim = p_framework2_sim(3, t, ControlSpec(), GroverConfig(4, 0));
  EXPECT_NEAR(sim, kK3Half16, 1e-12);
  const double display = p_framework2_closed(3, t, 16);
  EXPECT_NEAR(display, kK3Half16Display, 1e-12);
  EXPECT_NEAR(display - sim, 6.8231e-2, 1e-6);
}

TEST(K2Expression, ResolvedGroupingMatchesSimulation) {
  for (std::size_t n : {1u, 2u, 4u}) {
    for (int i = 0; i <= 10; ++i) {
      const NoiseParams t(i / 10.0);
      const std::size_t d = std::size_t{1} << n;
      EXPECT_NEAR(p_framework2_k2_expression(t, d, ControlSpec()),
                  p_framework2_sim(2, t, ControlSpec(), GroverConfig(static_cast<int>(n), 0)), 1e-12);
    }
  }
}

TEST(PFramework2Sim, Examples) {
  for (int k = 0; k <= 4; ++k) {
    EXPECT_NEAR(p_framework2_sim(k, NoiseParams(1.0), ControlSpec(0.3), GroverConfig(4, 1)),
                ideal_success_probability(k, 16), 1e-12);
  }
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (double theta : {0.5, 0.25, 0.0}) {
      EXPECT_NEAR(p_framework2_sim(1, NoiseParams(t), ControlSpec(theta), GroverConfig(4, 0)),
                  p_framework1_sim(1, NoiseParams(t), ControlSpec(theta), GroverConfig(4, 0)), 1e-12);
    }
  }
  for (double t : {0.25, 0.5, 0.75}) {
    EXPECT_GE(p_framework2_sim(3, NoiseParams(t), ControlSpec(), GroverConfig(4, 0)) + 1e-12,
              p_framework1(3, NoiseParams(t), 16));
  }
}

TEST(PFramework2Sim, MarkedIndexSymmetry) {
  const double ref = p_framework2_sim(2, NoiseParams(0.4), ControlSpec(), GroverConfig(2, 0));
  for (std::size_t x = 1; x < 4; ++x) {
    EXPECT_NEAR(p_framework2_sim(2, NoiseParams(0.4), ControlSpec(), GroverConfig(2, x)), ref, 1e-12);
  }
}

TEST(PFramework2Sim, OracleAgreement) {
  const GroverConfig cfg(2, 0);
  EXPECT_NEAR(oracle::simulate_framework(oracle::Framework::kDeferred, 2, NoiseParams(0.5), ControlSpec(), cfg),
              p_framework2_sim(2, NoiseParams(0.5), ControlSpec(), cfg), 1e-10);
  for (int n : {1, 2, 4}) {
    for (int k = 1; k <= 3; ++k) {
      for (double theta : {0.5, 0.3}) {
        const GroverConfig c(n, 0);
        EXPECT_NEAR(oracle::simulate_framework(oracle::Framework::kDeferred, k, NoiseParams(0.35), ControlSpec(theta), c),
                    p_framework2_sim(k, NoiseParams(0.35), ControlSpec(theta), c), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace sg
