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

// Quantum switch of two channels with one control qubit.
//
// The joint register is control (outer) x system (inner), so a joint
// state is a 2 x 2 grid of system-sized blocks. A switch Kraus operator
// W_ij = |0><0| (x) B_j A_i + |1><1| (x) A_i B_j is block diagonal; it is
// stored as its two diagonal blocks.

#pragma once

#include <cstddef>
#include <vector>

#include "switchgrover/channels.hpp"
#include "switchgrover/qmath.hpp"

namespace sg {

/// Control qubit sqrt(theta)|0> + sqrt(1 - theta)|1>.
class ControlSpec {
 public:
  /// Throws DomainError unless theta is in [0, 1].
  explicit ControlSpec(double theta = 0.5);

  double theta() const { return theta_; }
  double theta_bar() const { return 1.0 - theta_; }
  /// sqrt(theta * (1 - theta)), the only way theta enters post-selected output.
  double coherence() const;

 private:
  double theta_;
};

/// [[theta, sqrt(theta theta_bar)], [sqrt(theta theta_bar), theta_bar]]
DensityMatrix control_state(const ControlSpec& spec);

class SwitchKrausSet {
 public:
  static constexpr double kCompletenessTol = 1e-10;

  struct Op {
    ComplexMatrix zero_branch;  // B_j A_i: first channel applied first
    ComplexMatrix one_branch;   // A_i B_j: second channel applied first
  };

  SwitchKrausSet(std::size_t dim, std::vector<Op> ops);

  /// System dimension; joint operators act on 2 * dim.
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<Op>& ops() const { return ops_; }
  /// Full 2d x 2d joint operator |0><0| (x) zero + |1><1| (x) one.
  ComplexMatrix joint_operator(std::size_t index) const;
  /// max-abs entry of sum W^dagger W - I_2d.
  double completeness_error() const;

 private:
  std::size_t dim_;
  std::vector<Op> ops_;
};

/// All |first| * |second| operators, index i * |second| + j for the pair
/// (first_i, second_j). Throws DimensionError on mismatched channels and
/// ValidityError when completeness fails by more than 1e-10.
SwitchKrausSet switch_kraus(const KrausChannel& first, const KrausChannel& second);

/// Same set with the |0>/|1> branch orders exchanged for every pair, i.e.
/// W_ij = |0><0| (x) A_i B_j + |1><1| (x) B_j A_i.
SwitchKrausSet switch_kraus_swapped_indices(const KrausChannel& first, const KrausChannel& second);

class JointState {
 public:
  /// Throws DimensionError unless state.dim() == 2 * system_dim.
  JointState(std::size_t system_dim, DensityMatrix state);

  std::size_t system_dim() const { return system_dim_; }
  const DensityMatrix& state() const { return state_; }
  const ComplexMatrix& mat() const { return state_.mat(); }
  /// System block for control indices (row, col) in {0, 1}.
  ComplexMatrix block(int row, int col) const;

 private:
  std::size_t system_dim_;
  DensityMatrix state_;
};

/// sum_ij W_ij (rho_c (x) rho) W_ij^dagger by explicit summation.
JointState apply_switch(const DensityMatrix& rho, const ControlSpec& spec, const SwitchKrausSet& kset);

/// Definite-order block map sum_ij (B_j A_i) y (B_j A_i)^dagger for
/// A = B = D_sqrt(t), on any square operator y: t y + (1 - t) Tr(y) I/d.
ComplexMatrix switch_same_order_map(const ComplexMatrix& y, NoiseParams t);
/// Interference block map sum_ij (B_j A_i) y (A_i B_j)^dagger for
/// A = B = D_sqrt(t): ((1 - sqrt t)^2/d^2 + t) y + 2 sqrt t (1 - sqrt t) Tr(y) I/d.
ComplexMatrix switch_cross_order_map(const ComplexMatrix& y, NoiseParams t);

/// Closed-form output of the switch of two D_sqrt(t) channels on
/// rho_c (x) rho.
JointState apply_switch_closed_form(const DensityMatrix& rho, const ControlSpec& spec, NoiseParams t);

enum class Branch { kPlus, kMinus };

struct ConditionalState {
  DensityMatrix state;
  double probability;
};

inline constexpr double kDegenerateBranchProbability = 1e-15;

/// Projects the control on |+> or |->; returns the normalized system state
/// and the outcome probability. Throws DegenerateBranchError below 1e-15.
ConditionalState measure_control(const JointState& joint, Branch branch);

}  // namespace sg

namespace sg {

/// How the switch of two D_sqrt(t) halves is evaluated.
enum class SwitchPath {
  kAuto,         // explicit Kraus sum for d <= 4, closed form above
  kBruteForce,   // explicit (d^2 + 1)^2-term sum
  kClosedForm,
};

inline constexpr std::size_t kBruteForceMaxDim = 4;

/// Switch of two identical D_sqrt(t) channels on rho_c (x) rho.
JointState switch_depolarizing(const DensityMatrix& rho, const ControlSpec& spec, NoiseParams t,
                               SwitchPath path = SwitchPath::kAuto);

}  // namespace sg
