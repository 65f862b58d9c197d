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

// Deferred mitigation: every Grover iteration gets its own switch and
// control qubit, the controls stay correlated with the search register,
// and all of them are projected on |+> once at the end.
//
// Each switch maps the current register X (system plus earlier controls)
// to the 2 x 2 block matrix
//     [ theta F(X)            sqrt(theta theta_bar) R(X) ]
//     [ sqrt(theta theta_bar) R(X)            theta_bar F(X) ]
// with the affine block maps
//     F(X) = f_rho X + f_id Tr_dxd(X) (x) I/d,
//     R(X) = r_rho X + r_id Tr_dxd(X) (x) I/d.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "switchgrover/channels.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/qmath.hpp"
#include "switchgrover/qswitch.hpp"

namespace sg {

/// Cap on the number of switch levels (iterations) a register may carry.
inline constexpr int kMaxSwitchLevels = 6;
/// Cap on the dense register dimension 2^k d.
inline constexpr std::size_t kMaxDenseDim = 1024;

struct FRCoefficients {
  double f_rho;  // t
  double f_id;   // 1 - t
  double r_rho;  // ((1 - sqrt t)/d)^2 + t
  double r_id;   // 2 sqrt t (1 - sqrt t)
};

FRCoefficients fr_coefficients(NoiseParams t, std::size_t d);

/// f_rho rho + f_id Tr(rho) I/d on a square operator.
ComplexMatrix f_map(const ComplexMatrix& rho, const FRCoefficients& c);
/// r_rho rho + r_id Tr(rho) I/d on a square operator.
ComplexMatrix r_map(const ComplexMatrix& rho, const FRCoefficients& c);

/// Block-lifted maps: c_rho X + c_id Tr_dxd(X) (x) I/d for a register
/// whose inner factor has dimension block_dim.
ComplexMatrix f_map_blocks(const ComplexMatrix& x, std::size_t block_dim, const FRCoefficients& c);
ComplexMatrix r_map_blocks(const ComplexMatrix& x, std::size_t block_dim, const FRCoefficients& c);

/// Register after k iterations: search register plus k controls.
class F2State {
 public:
  F2State(BlockState block, ControlSpec control);

  const BlockState& block() const { return block_; }
  int iterations() const { return block_.levels(); }
  const ControlSpec& control() const { return control_; }

 private:
  BlockState block_;
  ControlSpec control_;
};

/// k = 0 register: the uniform state with no controls.
F2State framework2_initial(const GroverConfig& cfg, const ControlSpec& control);

/// One iteration: (I (x) G) X (I (x) G^dagger), then a fresh switch of the
/// D_sqrt(t) halves. Throws CapacityError beyond kMaxSwitchLevels levels or
/// kMaxDenseDim.
F2State grow(const F2State& state, NoiseParams t, const GroverConfig& cfg);

/// Registers for k = 0 .. iterations.
std::vector<F2State> framework2_trajectory(int iterations, NoiseParams t, const ControlSpec& control,
                                           const GroverConfig& cfg);

struct PostSelected {
  DensityMatrix state;  // normalized search-register state
  double probability;   // Tr[M_k], probability of the all-|+> outcome
};

/// Direct projection (I_d (x) <+|^k) X (I_d (x) |+>^k). Requires k >= 1;
/// throws DegenerateBranchError below 1e-15.
PostSelected measure_all_plus(const F2State& state);

/// Unnormalized projection M_k as a d x d operator.
ComplexMatrix project_all_plus(const F2State& state);

/// The same projection built level by level:
///   M_j = 1/2 { (f_rho + 2c r_rho) G M_{j-1} G^dagger
///             + (f_id + 2c r_id) I/d <+|^(j-1) Tr_dxd(X_{j-1}) |+>^(j-1) },
/// c = sqrt(theta theta_bar), X_{j-1} the rotated level j-1 register of the
/// trajectory. Returns the unnormalized M_k.
ComplexMatrix project_all_plus_recursive(const std::vector<F2State>& trajectory, NoiseParams t,
                                         const GroverConfig& cfg);

/// Marked-index population after k iterations and all-|+> post-selection,
/// from the dense register. k = 0 returns 1/d.
double p_framework2_sim(int k, NoiseParams t, const ControlSpec& control, const GroverConfig& cfg);

/// Symbolic register: every d x d block is alpha rho(k) + beta I/d, tracked
/// as the pair (alpha, beta), together with its nested F/R word
/// (outermost map first).
class SymbolicF2 {
 public:
  struct Entry {
    double alpha;
    double beta;
    std::string word;
  };

  explicit SymbolicF2(ControlSpec control);

  int iterations() const { return levels_; }
  std::size_t grid() const { return std::size_t{1} << levels_; }
  const Entry& at(std::size_t row, std::size_t col) const { return entries_[row * grid() + col]; }
  std::size_t block_count() const { return entries_.size(); }
  const ControlSpec& control() const { return control_; }

  /// Throws CapacityError beyond kMaxSwitchLevels.
  SymbolicF2 grown(NoiseParams t, std::size_t d) const;

 private:
  ControlSpec control_;
  int levels_ = 0;
  std::vector<Entry> entries_;
};

struct SymbolicMeasurement {
  double rho_coefficient;    // normalized weight of rho(k)
  double mixed_coefficient;  // normalized weight of I/d
  double probability;        // all-|+> post-selection probability
};

SymbolicMeasurement symbolic_measure_all_plus(const SymbolicF2& state);

/// rho_coefficient P(k, 0, d) + mixed_coefficient / d from the symbolic
/// register; supports k up to kMaxSwitchLevels at any d.
double p_framework2_symbolic(int k, NoiseParams t, const ControlSpec& control, std::size_t d);

/// The printed success-probability displays for k = 1, 2, 3 at theta = 1/2,
/// evaluated literally. Throws UnsupportedError for other k.
double p_framework2_closed(int k, NoiseParams t, std::size_t d);

/// Placement of the trailing "+ f_rho + 2c r_rho" in the printed k = 2
/// post-selected state.
enum class K2Grouping {
  kAsTypeset,  // a^2 + b (1 + 2c r_rho + r_id) + a
  kResolved,   // a^2 + b (1 + 2c r_rho + r_id + a)
};

struct AffineWeights {
  double rho_coefficient;
  double mixed_coefficient;
};

/// Normalized rho(2) and I/d weights of the printed k = 2 post-selected
/// state with a = f_rho + 2c r_rho, b = f_id + 2c r_id.
AffineWeights framework2_k2_expression(NoiseParams t, std::size_t d, const ControlSpec& control,
                                             K2Grouping grouping);

/// Success probability from framework2_k2_expression.
double p_framework2_k2_expression(NoiseParams t, std::size_t d, const ControlSpec& control,
                                  K2Grouping grouping = K2Grouping::kResolved);

}  // namespace sg
