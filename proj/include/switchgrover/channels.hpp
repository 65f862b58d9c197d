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
#include <string>
#include <vector>

#include "switchgrover/qmath.hpp"

namespace sg {

/// Depolarizing parameter: t is the probability of keeping the state,
/// 1 - t the noise strength.
class NoiseParams {
 public:
  /// Throws DomainError unless t is in [0, 1].
  explicit NoiseParams(double t);
  static NoiseParams from_noise_strength(double one_minus_t);

  double t() const { return t_; }
  double noise_strength() const { return 1.0 - t_; }
  /// The per-half parameter sqrt(t) used when D_t is split in two.
  NoiseParams sqrt_split() const;

 private:
  double t_;
};

/// A CPTP map in operator-sum form. The constructor rejects Kraus sets that
/// are empty, ragged, or violate sum K^dagger K = I beyond completeness_tol.
class KrausChannel {
 public:
  static constexpr double kCompletenessTol = 1e-12;

  KrausChannel(std::vector<ComplexMatrix> ops, std::string label,
               double completeness_tol = kCompletenessTol);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const ComplexMatrix& operator[](std::size_t i) const { return ops_[i]; }
  const std::string& label() const { return label_; }

  /// max-abs entry of sum K^dagger K - I.
  double completeness_error() const;

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
  std::string label_;
};

enum class KrausSplit {
  kPlain,      // D_t:      K0 = sqrt(t) I,  Ki = sqrt((1-t)/d^2) U_i
  kSqrtSplit,  // D_sqrt(t): K0 = t^(1/4) I, Ki = sqrt((1-sqrt t)/d^2) U_i
};

/// t * rho + (1 - t) Tr(rho) I/d
DensityMatrix depolarize(const DensityMatrix& rho, NoiseParams t);
/// Same affine map on an arbitrary square operator (blocks of joint states).
ComplexMatrix depolarize_operator(const ComplexMatrix& m, NoiseParams t);

/// Kraus set of D_t (or of D_sqrt(t) when split is kSqrtSplit) over the
/// Pauli basis on log2(d) qubits; d^2 + 1 operators, index 0 is the
/// identity term. Throws DimensionError when d is not 2^n with n in
/// [1, kMaxQubits].
KrausChannel depolarizing_kraus(NoiseParams t, KrausSplit split, std::size_t d);

KrausChannel identity_channel(std::size_t d);
KrausChannel unitary_channel(const ComplexMatrix& u, std::string label = "unitary");

/// sum_i K_i rho K_i^dagger
DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho);
/// Kraus sum on an arbitrary square operator.
ComplexMatrix apply_kraus_operator(const KrausChannel& ch, const ComplexMatrix& m);

/// outer o inner, Kraus operators {K_outer_i K_inner_j}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// log2(d) when d is a supported power of two, else throws DimensionError.
int qubits_for_dim(std::size_t d);

}  // namespace sg
