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

#include "switchgrover/framework2.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "switchgrover/errors.hpp"
#include "switchgrover/hooks.hpp"

namespace sg {

namespace {

ComplexMatrix block_traces(const ComplexMatrix& x, std::size_t block_dim) {
  const auto d = static_cast<Eigen::Index>(block_dim);
  if (x.rows() != x.cols() || x.rows() % d != 0) {
    throw DimensionError("block trace: register is not a grid of d x d blocks");
  }
  const Eigen::Index n = x.rows() / d;
  ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = x.block(i * d, j * d, d, d).trace();
  }
  return out;
}

ComplexMatrix affine_block_map(const ComplexMatrix& x, std::size_t block_dim, double keep, double mix) {
  return keep * x + mix * kron(block_traces(x, block_dim), maximally_mixed(block_dim));
}

// (I (x) G) x (I (x) G^dagger) computed block by block.
ComplexMatrix rotate_blocks(const ComplexMatrix& x, const ComplexMatrix& g) {
  const Eigen::Index d = g.rows();
  const Eigen::Index n = x.rows() / d;
  ComplexMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * d, j * d, d, d).noalias() = g * x.block(i * d, j * d, d, d) * g.adjoint();
    }
  }
  return out;
}

}  // namespace

FRCoefficients fr_coefficients(NoiseParams t, std::size_t d) {
  if (d < 1) throw DomainError("fr_coefficients: d must be positive");
  const double s = std::sqrt(t.t());
  const double dd = static_cast<double>(d);
  return {t.t(), 1.0 - t.t(), std::pow((1.0 - s) / dd, 2) + t.t(), 2.0 * s * (1.0 - s)};
}

ComplexMatrix f_map(const ComplexMatrix& rho, const FRCoefficients& c) {
  if (rho.rows() != rho.cols()) throw DimensionError("f_map: square operator required");
  return c.f_rho * rho + c.f_id * rho.trace() * maximally_mixed(static_cast<std::size_t>(rho.rows()));
}

ComplexMatrix r_map(const ComplexMatrix& rho, const FRCoefficients& c) {
  if (rho.rows() != rho.cols()) throw DimensionError("r_map: square operator required");
  return c.r_rho * rho + c.r_id * rho.trace() * maximally_mixed(static_cast<std::size_t>(rho.rows()));
}

ComplexMatrix f_map_blocks(const ComplexMatrix& x, std::size_t block_dim, const FRCoefficients& c) {
  return affine_block_map(x, block_dim, c.f_rho, c.f_id);
}

ComplexMatrix r_map_blocks(const ComplexMatrix& x, std::size_t block_dim, const FRCoefficients& c) {
  return affine_block_map(x, block_dim, c.r_rho, c.r_id);
}

F2State::F2State(BlockState block, ControlSpec control) : block_(std::move(block)), control_(control) {}

F2State framework2_initial(const GroverConfig& cfg, const ControlSpec& control) {
  return F2State(BlockState(cfg.dim(), 0, uniform_state(cfg.dim()).mat()), control);
}

F2State grow(const F2State& state, NoiseParams t, const GroverConfig& cfg) {
  const int levels = state.iterations() + 1;
  if (levels > kMaxSwitchLevels) {
    throw CapacityError("grow: more than " + std::to_string(kMaxSwitchLevels) + " switch levels");
  }
  const std::size_t d = cfg.dim();
  if (state.block().block_dim() != d) throw DimensionError("grow: register and search space differ");
  const auto n = state.block().mat().rows();
  if (static_cast<std::size_t>(2 * n) > kMaxDenseDim) {
    throw CapacityError("grow: dense register would exceed " + std::to_string(kMaxDenseDim));
  }

  const ComplexMatrix y = rotate_blocks(state.block().mat(), grover_unitary(cfg));
  const FRCoefficients c = fr_coefficients(t, d);
  const ComplexMatrix f = f_map_blocks(y, d, c);
  const ComplexMatrix r = r_map_blocks(y, d, c);
  const ControlSpec& ctl = state.control();

  ComplexMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = ctl.theta() * f;
  out.bottomRightCorner(n, n) = ctl.theta_bar() * f;
  out.topRightCorner(n, n) = ctl.coherence() * r;
  out.bottomLeftCorner(n, n) = ctl.coherence() * r;
  return F2State(BlockState(d, levels, 0.5 * (out + out.adjoint())), ctl);
}

std::vector<F2State> framework2_trajectory(int iterations, NoiseParams t, const ControlSpec& control,
                                           const GroverConfig& cfg) {
  if (iterations < 0) throw DomainError("framework2_trajectory: iterations must be non-negative");
  std::vector<F2State> out;
  out.reserve(static_cast<std::size_t>(iterations) + 1);
  out.push_back(framework2_initial(cfg, control));
  for (int k = 0; k < iterations; ++k) out.push_back(grow(out.back(), t, cfg));
  return out;
}

ComplexMatrix project_all_plus(const F2State& state) {
  if (state.iterations() < 1) throw DomainError("measure_all_plus: register has no controls");
  const BlockState& b = state.block();
  ComplexMatrix acc = zeros(b.block_dim(), b.block_dim());
  for (std::size_t i = 0; i < b.grid(); ++i) {
    for (std::size_t j = 0; j < b.grid(); ++j) acc += b.block(i, j);
  }
  return acc / static_cast<double>(b.grid());
}

PostSelected measure_all_plus(const F2State& state) {
  ComplexMatrix m = project_all_plus(state);
  const double p = m.trace().real();
  if (!(p >= kDegenerateBranchProbability)) {
    throw DegenerateBranchError("measure_all_plus: post-selection probability " + std::to_string(p));
  }
  m /= p;
  return {DensityMatrix(0.5 * (m + m.adjoint())), p};
}

ComplexMatrix project_all_plus_recursive(const std::vector<F2State>& trajectory, NoiseParams t,
                                         const GroverConfig& cfg) {
  if (trajectory.size() < 2) throw DomainError("project_all_plus_recursive: need at least one level");
  for (std::size_t j = 0; j < trajectory.size(); ++j) {
    if (trajectory[j].iterations() != static_cast<int>(j)) {
      throw DomainError("project_all_plus_recursive: trajectory levels out of order");
    }
  }
  const std::size_t d = cfg.dim();
  const ComplexMatrix g = grover_unitary(cfg);
  const FRCoefficients c = fr_coefficients(t, d);
  const double coh = trajectory.front().control().coherence();
  const double keep = c.f_rho + 2.0 * coh * c.r_rho;
  const double mix = c.f_id + 2.0 * coh * c.r_id;

  ComplexMatrix m = trajectory.front().block().mat();
  for (std::size_t j = 1; j < trajectory.size(); ++j) {
    const ComplexMatrix prev = rotate_blocks(trajectory[j - 1].block().mat(), g);
    const ComplexMatrix traces = block_traces(prev, d);
    // <+|^(j-1) T |+>^(j-1) is the mean of all entries of T
    const Complex projected_trace = traces.sum() / static_cast<double>(traces.rows());
    m = 0.5 * (keep * conjugate(g, m) + mix * projected_trace * maximally_mixed(d));
  }
  return m;
}

double p_framework2_sim(int k, NoiseParams t, const ControlSpec& control, const GroverConfig& cfg) {
  if (k == 0) return uniform_state(cfg.dim()).population(cfg.marked());
  const auto trajectory = framework2_trajectory(k, t, control, cfg);
  return measure_all_plus(trajectory.back()).state.population(cfg.marked());
}

SymbolicF2::SymbolicF2(ControlSpec control) : control_(control), entries_{{1.0, 0.0, ""}} {}

SymbolicF2 SymbolicF2::grown(NoiseParams t, std::size_t d) const {
  if (levels_ + 1 > kMaxSwitchLevels) {
    throw CapacityError("SymbolicF2: more than " + std::to_string(kMaxSwitchLevels) + " switch levels");
  }
  const FRCoefficients c = fr_coefficients(t, d);
  const std::size_t g = grid();
  const double weight[2][2] = {{control_.theta(), control_.coherence()},
                               {control_.coherence(), control_.theta_bar()}};
  SymbolicF2 next(control_);
  next.levels_ = levels_ + 1;
  next.entries_.assign(4 * g * g, Entry{0.0, 0.0, ""});
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const bool diagonal = a == b;
      const double keep = diagonal ? c.f_rho : c.r_rho;
      const double mix = diagonal ? c.f_id : c.r_id;
      for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
          const Entry& e = at(i, j);
          Entry& out = next.entries_[(a * g + i) * (2 * g) + (b * g + j)];
          out.alpha = weight[a][b] * keep * e.alpha;
          out.beta = weight[a][b] * (keep * e.beta + mix * (e.alpha + e.beta));
          out.word = (diagonal ? "F" : "R") + e.word;
        }
      }
    }
  }
  return next;
}

SymbolicMeasurement symbolic_measure_all_plus(const SymbolicF2& state) {
  if (state.iterations() < 1) throw DomainError("symbolic_measure_all_plus: register has no controls");
  double alpha = 0.0;
  double beta = 0.0;
  for (std::size_t i = 0; i < state.grid(); ++i) {
    for (std::size_t j = 0; j < state.grid(); ++j) {
      alpha += state.at(i, j).alpha;
      beta += state.at(i, j).beta;
    }
  }
  const double scale = static_cast<double>(state.grid());
  const double p = (alpha + beta) / scale;
  if (!(p >= kDegenerateBranchProbability)) {
    throw DegenerateBranchError("symbolic_measure_all_plus: post-selection probability " + std::to_string(p));
  }
  return {alpha / (alpha + beta), beta / (alpha + beta), p};
}

double p_framework2_symbolic(int k, NoiseParams t, const ControlSpec& control, std::size_t d) {
  if (k < 0) throw DomainError("p_framework2_symbolic: k must be non-negative");
  if (k == 0) return ideal_success_probability(0, d);
  SymbolicF2 state(control);
  for (int i = 0; i < k; ++i) state = state.grown(t, d);
  const SymbolicMeasurement m = symbolic_measure_all_plus(state);
  return m.rho_coefficient * ideal_success_probability(k, d) + m.mixed_coefficient / static_cast<double>(d);
}

double p_framework2_closed(int k, NoiseParams t, std::size_t d) {
  if (k < 1 || k > 3) {
    throw UnsupportedError("p_framework2_closed: closed forms exist for k = 1, 2, 3 only; use the simulation");
  }
  const double s = std::sqrt(t.t());
  const double tt = t.t();
  const double dd = static_cast<double>(d);
  const double u = (1.0 - s) * (1.0 - s);  // (1 - sqrt t)^2
  const double a = u / (dd * dd) + 2.0 * tt;
  double weight = 0.0;
  if (k == 1) {
    weight = a / ((1.0 + (tt - 2.0 * s) * (1.0 - dd * dd)) / (dd * dd) + 1.0);
  } else {
    const double b = 1.0 + 2.0 * (1.0 - s) * s - tt;
    const double tail = k == 2 ? 1.0 + u / (dd * dd) + 2.0 * (1.0 - s) * s + 3.0 * tt
                               : 1.0 + u / (2.0 * dd * dd) + 2.0 * (1.0 - s) * s + 3.0 * tt + a * a;
    const double ak = std::pow(a, k);
    weight = ak / (ak + b * tail);
  }
  return hooks::closed_form_result(weight * ideal_success_probability(k, d) + (1.0 - weight) / dd);
}

AffineWeights framework2_k2_expression(NoiseParams t, std::size_t d, const ControlSpec& control,
                                       K2Grouping grouping) {
  const FRCoefficients c = fr_coefficients(t, d);
  const double two_c = 2.0 * control.coherence();
  const double a = c.f_rho + two_c * c.r_rho;
  const double b = c.f_id + two_c * c.r_id;
  const double q = 1.0 + two_c * c.r_rho + c.r_id;
  const double mixed = grouping == K2Grouping::kAsTypeset ? b * q + a : b * (q + a);
  const double den = a * a + mixed;
  return {a * a / den, mixed / den};
}

double p_framework2_k2_expression(NoiseParams t, std::size_t d, const ControlSpec& control, K2Grouping grouping) {
  const AffineWeights w = framework2_k2_expression(t, d, control, grouping);
  return hooks::closed_form_result(w.rho_coefficient * ideal_success_probability(2, d) +
                                   w.mixed_coefficient / static_cast<double>(d));
}

}  // namespace sg
