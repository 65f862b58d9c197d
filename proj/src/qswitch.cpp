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

#include "switchgrover/qswitch.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "switchgrover/errors.hpp"

namespace sg {

ControlSpec::ControlSpec(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError("ControlSpec: theta must lie in [0, 1], got " + std::to_string(theta));
  }
}

double ControlSpec::coherence() const { return std::sqrt(theta_ * (1.0 - theta_)); }

DensityMatrix control_state(const ControlSpec& spec) {
  ComplexMatrix rc(2, 2);
  rc << spec.theta(), spec.coherence(), spec.coherence(), spec.theta_bar();
  return DensityMatrix(std::move(rc));
}

SwitchKrausSet::SwitchKrausSet(std::size_t dim, std::vector<Op> ops) : dim_(dim), ops_(std::move(ops)) {
  if (ops_.empty()) throw ValidityError("SwitchKrausSet: empty operator set");
  for (const auto& op : ops_) {
    for (const ComplexMatrix* m : {&op.zero_branch, &op.one_branch}) {
      if (static_cast<std::size_t>(m->rows()) != dim_ || static_cast<std::size_t>(m->cols()) != dim_) {
        throw DimensionError("SwitchKrausSet: branch operator has wrong dimension");
      }
    }
  }
  const double err = completeness_error();
  if (!(err <= kCompletenessTol)) {
    throw ValidityError("SwitchKrausSet: completeness violated by " + std::to_string(err));
  }
}

ComplexMatrix SwitchKrausSet::joint_operator(std::size_t index) const {
  const auto& op = ops_.at(index);
  return kron(basis_projector(2, 0), op.zero_branch) + kron(basis_projector(2, 1), op.one_branch);
}

double SwitchKrausSet::completeness_error() const {
  ComplexMatrix zero = zeros(dim_, dim_);
  ComplexMatrix one = zeros(dim_, dim_);
  for (const auto& op : ops_) {
    zero.noalias() += op.zero_branch.adjoint() * op.zero_branch;
    one.noalias() += op.one_branch.adjoint() * op.one_branch;
  }
  return std::max(max_abs_diff(zero, identity(dim_)), max_abs_diff(one, identity(dim_)));
}

namespace {

SwitchKrausSet build_switch(const KrausChannel& first, const KrausChannel& second, bool swapped) {
  if (first.dim() != second.dim()) throw DimensionError("switch_kraus: channel dimensions differ");
  std::vector<SwitchKrausSet::Op> ops;
  ops.reserve(first.size() * second.size());
  for (const auto& a : first.ops()) {
    for (const auto& b : second.ops()) {
      ComplexMatrix first_then_second = b * a;
      ComplexMatrix second_then_first = a * b;
      if (swapped) std::swap(first_then_second, second_then_first);
      ops.push_back({std::move(first_then_second), std::move(second_then_first)});
    }
  }
  return SwitchKrausSet(first.dim(), std::move(ops));
}

}  // namespace

SwitchKrausSet switch_kraus(const KrausChannel& first, const KrausChannel& second) {
  return build_switch(first, second, false);
}

SwitchKrausSet switch_kraus_swapped_indices(const KrausChannel& first, const KrausChannel& second) {
  return build_switch(first, second, true);
}

JointState::JointState(std::size_t system_dim, DensityMatrix state)
    : system_dim_(system_dim), state_(std::move(state)) {
  if (state_.dim() != 2 * system_dim_) {
    throw DimensionError("JointState: expected dimension " + std::to_string(2 * system_dim_));
  }
}

ComplexMatrix JointState::block(int row, int col) const {
  const auto d = static_cast<Eigen::Index>(system_dim_);
  return mat().block(row * d, col * d, d, d);
}

JointState apply_switch(const DensityMatrix& rho, const ControlSpec& spec, const SwitchKrausSet& kset) {
  if (rho.dim() != kset.dim()) throw DimensionError("apply_switch: state and switch dimensions differ");
  const auto d = static_cast<Eigen::Index>(kset.dim());
  const ComplexMatrix rc = control_state(spec).mat();
  ComplexMatrix out = zeros(2 * kset.dim(), 2 * kset.dim());
  // W (rc (x) rho) W^dagger, block (a, b) = rc(a, b) M_a rho M_b^dagger.
  for (const auto& op : kset.ops()) {
    const ComplexMatrix* branch[2] = {&op.zero_branch, &op.one_branch};
    for (int a = 0; a < 2; ++a) {
      const ComplexMatrix left = *branch[a] * rho.mat();
      for (int b = 0; b < 2; ++b) {
        if (rc(a, b) == Complex(0.0)) continue;
        out.block(a * d, b * d, d, d).noalias() += rc(a, b) * (left * branch[b]->adjoint());
      }
    }
  }
  return JointState(kset.dim(), DensityMatrix(0.5 * (out + out.adjoint())));
}

ComplexMatrix switch_same_order_map(const ComplexMatrix& y, NoiseParams t) {
  return depolarize_operator(y, t);
}

ComplexMatrix switch_cross_order_map(const ComplexMatrix& y, NoiseParams t) {
  if (y.rows() != y.cols()) throw DimensionError("switch_cross_order_map: square operator required");
  const auto d = static_cast<double>(y.rows());
  const double s = std::sqrt(t.t());
  const double keep = (1.0 - s) * (1.0 - s) / (d * d) + t.t();
  const double mix = 2.0 * s * (1.0 - s);
  return keep * y + mix * y.trace() * maximally_mixed(static_cast<std::size_t>(y.rows()));
}

JointState apply_switch_closed_form(const DensityMatrix& rho, const ControlSpec& spec, NoiseParams t) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const ComplexMatrix same = switch_same_order_map(rho.mat(), t);
  const ComplexMatrix cross = switch_cross_order_map(rho.mat(), t);
  ComplexMatrix out(2 * d, 2 * d);
  out.block(0, 0, d, d) = spec.theta() * same;
  out.block(d, d, d, d) = spec.theta_bar() * same;
  out.block(0, d, d, d) = spec.coherence() * cross;
  out.block(d, 0, d, d) = spec.coherence() * cross;
  return JointState(rho.dim(), DensityMatrix(std::move(out)));
}

ConditionalState measure_control(const JointState& joint, Branch branch) {
  const double sign = branch == Branch::kPlus ? 1.0 : -1.0;
  ComplexMatrix cond = 0.5 * (joint.block(0, 0) + joint.block(1, 1) + sign * (joint.block(0, 1) + joint.block(1, 0)));
  const double p = cond.trace().real();
  if (!(p >= kDegenerateBranchProbability)) {
    throw DegenerateBranchError("measure_control: branch probability " + std::to_string(p) +
                                " is below the post-selection threshold");
  }
  cond /= p;
  return {DensityMatrix(0.5 * (cond + cond.adjoint())), p};
}

}  // namespace sg

namespace sg {

JointState switch_depolarizing(const DensityMatrix& rho, const ControlSpec& spec, NoiseParams t,
                               SwitchPath path) {
  const bool brute = path == SwitchPath::kBruteForce ||
                     (path == SwitchPath::kAuto && rho.dim() <= kBruteForceMaxDim);
  if (!brute) return apply_switch_closed_form(rho, spec, t);
  const KrausChannel half = depolarizing_kraus(t, KrausSplit::kSqrtSplit, rho.dim());
  return apply_switch(rho, spec, switch_kraus(half, half));
}

}  // namespace sg
