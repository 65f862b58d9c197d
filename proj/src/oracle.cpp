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

#include "switchgrover/oracle.hpp"

#include <string>
#include <vector>

#include "switchgrover/errors.hpp"

namespace sg::oracle {

namespace {

void check_capacity(int k, const GroverConfig& cfg, const char* who) {
  if (k < 0) throw DomainError(std::string(who) + ": k must be non-negative");
  if (k > kMaxIterations) throw CapacityError(std::string(who) + ": k exceeds " + std::to_string(kMaxIterations));
  if (cfg.dim() > kMaxDim) throw CapacityError(std::string(who) + ": d exceeds " + std::to_string(kMaxDim));
}

KrausChannel lifted(const KrausChannel& ch, std::size_t outer) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.size());
  const ComplexMatrix id = identity(outer);
  for (const auto& k : ch.ops()) ops.push_back(kron(id, k));
  return KrausChannel(std::move(ops), ch.label() + " lifted");
}

// Applies the switch of D_sqrt(t) with itself to the system factor of x,
// one sub-block at a time, and places the new control outermost.
ComplexMatrix switch_blockwise(const ComplexMatrix& x, std::size_t d, const ControlSpec& spec, NoiseParams t) {
  const auto dd = static_cast<Eigen::Index>(d);
  const Eigen::Index n = x.rows();
  const Eigen::Index g = n / dd;
  ComplexMatrix same(n, n);
  ComplexMatrix cross(n, n);
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) {
      const ComplexMatrix y = x.block(i * dd, j * dd, dd, dd);
      same.block(i * dd, j * dd, dd, dd) = switch_same_order_map(y, t);
      cross.block(i * dd, j * dd, dd, dd) = switch_cross_order_map(y, t);
    }
  }
  ComplexMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = spec.theta() * same;
  out.bottomRightCorner(n, n) = spec.theta_bar() * same;
  out.topRightCorner(n, n) = spec.coherence() * cross;
  out.bottomLeftCorner(n, n) = spec.coherence() * cross;
  return out;
}

}  // namespace

DensityMatrix simulate_noisy_grover(int k, NoiseParams t, const GroverConfig& cfg) {
  check_capacity(k, cfg, "simulate_noisy_grover");
  const KrausChannel g = unitary_channel(grover_unitary(cfg), "G");
  const KrausChannel noise = depolarizing_kraus(t, KrausSplit::kPlain, cfg.dim());
  DensityMatrix rho = uniform_state(cfg.dim());
  for (int i = 0; i < k; ++i) rho = apply_kraus(noise, apply_kraus(g, rho));
  return rho;
}

namespace {

DensityMatrix stepwise_state(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg) {
  const std::size_t d = cfg.dim();
  const KrausChannel g = unitary_channel(grover_unitary(cfg), "G");
  const bool explicit_pairs = d <= kBruteForceMaxDim;
  const KrausChannel half = depolarizing_kraus(t, KrausSplit::kSqrtSplit, d);
  DensityMatrix rho = uniform_state(d);
  for (int i = 0; i < k; ++i) {
    const DensityMatrix rotated = apply_kraus(g, rho);
    const JointState joint = explicit_pairs ? apply_switch(rotated, spec, switch_kraus(half, half))
                                            : apply_switch_closed_form(rotated, spec, t);
    rho = measure_control(joint, Branch::kPlus).state;
  }
  return rho;
}

}  // namespace

DensityMatrix simulate_deferred_state(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg) {
  check_capacity(k, cfg, "simulate_deferred_state");
  const std::size_t d = cfg.dim();
  if (k == 0) return uniform_state(d);
  const ComplexMatrix g = grover_unitary(cfg);
  const KrausChannel half = depolarizing_kraus(t, KrausSplit::kSqrtSplit, d);
  ComplexMatrix x = uniform_state(d).mat();
  for (int level = 0; level < k; ++level) {
    const std::size_t outer = std::size_t{1} << level;
    const std::size_t n = outer * d;
    const ComplexMatrix rotated = conjugate(kron(identity(outer), g), x);
    if (d <= kBruteForceMaxDim && n <= kMaxExplicitLiftedDim) {
      const KrausChannel l = lifted(half, outer);
      x = apply_switch(DensityMatrix(rotated), spec, switch_kraus(l, l)).mat();
    } else {
      x = switch_blockwise(rotated, d, spec, t);
    }
  }
  // <+|^k on every control: average of all d x d blocks.
  const auto dd = static_cast<Eigen::Index>(d);
  const Eigen::Index grid = x.rows() / dd;
  ComplexMatrix m = zeros(d, d);
  for (Eigen::Index i = 0; i < grid; ++i) {
    for (Eigen::Index j = 0; j < grid; ++j) m += x.block(i * dd, j * dd, dd, dd);
  }
  m /= static_cast<double>(grid);
  const double p = m.trace().real();
  if (!(p >= kDegenerateBranchProbability)) {
    throw DegenerateBranchError("simulate_deferred_state: all-plus outcome has probability " + std::to_string(p));
  }
  m /= p;
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

double simulate_framework(Framework framework, int k, NoiseParams t, const ControlSpec& spec,
                          const GroverConfig& cfg) {
  check_capacity(k, cfg, "simulate_framework");
  const DensityMatrix rho = framework == Framework::kStepwise ? stepwise_state(k, t, spec, cfg)
                                                              : simulate_deferred_state(k, t, spec, cfg);
  return rho.population(cfg.marked());
}

}  // namespace sg::oracle
