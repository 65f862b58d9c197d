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

#include "switchgrover/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "switchgrover/errors.hpp"

namespace sg {

NoiseParams::NoiseParams(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("NoiseParams: t must lie in [0, 1], got " + std::to_string(t));
  }
}

NoiseParams NoiseParams::from_noise_strength(double one_minus_t) {
  if (!(one_minus_t >= 0.0 && one_minus_t <= 1.0)) {
    throw DomainError("NoiseParams: noise strength must lie in [0, 1], got " +
                      std::to_string(one_minus_t));
  }
  return NoiseParams(1.0 - one_minus_t);
}

NoiseParams NoiseParams::sqrt_split() const { return NoiseParams(std::sqrt(t_)); }

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::string label, double completeness_tol)
    : dim_(0), ops_(std::move(ops)), label_(std::move(label)) {
  if (ops_.empty()) throw ValidityError("KrausChannel: empty Kraus set");
  dim_ = static_cast<std::size_t>(ops_.front().rows());
  for (const auto& k : ops_) {
    if (k.rows() != k.cols() || static_cast<std::size_t>(k.rows()) != dim_ || dim_ == 0) {
      throw DimensionError("KrausChannel: operators must share one square dimension");
    }
  }
  const double err = completeness_error();
  if (!(err <= completeness_tol)) {
    throw ValidityError("KrausChannel '" + label_ + "': completeness violated by " + std::to_string(err));
  }
}

double KrausChannel::completeness_error() const {
  ComplexMatrix acc = zeros(dim_, dim_);
  for (const auto& k : ops_) acc.noalias() += k.adjoint() * k;
  return max_abs_diff(acc, identity(dim_));
}

ComplexMatrix depolarize_operator(const ComplexMatrix& m, NoiseParams t) {
  if (m.rows() != m.cols()) throw DimensionError("depolarize: square operator required");
  const auto d = static_cast<std::size_t>(m.rows());
  return t.t() * m + (1.0 - t.t()) * m.trace() * maximally_mixed(d);
}

DensityMatrix depolarize(const DensityMatrix& rho, NoiseParams t) {
  return DensityMatrix(depolarize_operator(rho.mat(), t));
}

int qubits_for_dim(std::size_t d) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if ((std::size_t{1} << n) == d) return n;
  }
  throw DimensionError("dimension " + std::to_string(d) + " is not 2^n with 1 <= n <= " +
                       std::to_string(kMaxQubits));
}

KrausChannel depolarizing_kraus(NoiseParams t, KrausSplit split, std::size_t d) {
  const UnitaryBasis basis = pauli_basis(qubits_for_dim(d));
  const double keep = split == KrausSplit::kSqrtSplit ? std::sqrt(t.t()) : t.t();
  const double identity_weight = std::sqrt(keep);
  const double pauli_weight = std::sqrt((1.0 - keep) / static_cast<double>(d * d));

  std::vector<ComplexMatrix> ops;
  ops.reserve(basis.size() + 1);
  ops.push_back(identity_weight * identity(d));
  for (const auto& u : basis.ops()) ops.push_back(pauli_weight * u);
  const char* name = split == KrausSplit::kSqrtSplit ? "D_sqrt(t)" : "D_t";
  return KrausChannel(std::move(ops), std::string(name) + "[t=" + std::to_string(t.t()) + "]");
}

KrausChannel identity_channel(std::size_t d) {
  return KrausChannel({identity(d)}, "identity");
}

KrausChannel unitary_channel(const ComplexMatrix& u, std::string label) {
  if (!is_unitary(u)) throw ValidityError("unitary_channel: operator is not unitary");
  return KrausChannel({u}, std::move(label));
}

ComplexMatrix apply_kraus_operator(const KrausChannel& ch, const ComplexMatrix& m) {
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != ch.dim()) {
    throw DimensionError("apply_kraus: operator dimension does not match channel");
  }
  ComplexMatrix acc = zeros(ch.dim(), ch.dim());
  for (const auto& k : ch.ops()) acc.noalias() += k * m * k.adjoint();
  return acc;
}

DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho) {
  ComplexMatrix out = apply_kraus_operator(ch, rho.mat());
  // remove the O(eps) anti-Hermitian round-off before validation
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) throw DimensionError("compose: channel dimensions differ");
  std::vector<ComplexMatrix> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& a : outer.ops()) {
    for (const auto& b : inner.ops()) ops.push_back(a * b);
  }
  return KrausChannel(std::move(ops), outer.label() + " o " + inner.label());
}

}  // namespace sg
