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

// Dense complex-matrix kernel shared by every other module: Kronecker
// products, traces and block traces, validity checks, the Pauli-string
// unitary basis, and a couple of small decomposition helpers.
//
// Layout convention for joint registers: control qubits are the outer
// (most significant) tensor factors and the d-dimensional search register
// is the inner one, so a register with k controls is a 2^k x 2^k grid of
// d x d blocks. The most recently attached control is the outermost.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace sg {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
}  // namespace tol

/// Largest supported search-register width (d = 64).
inline constexpr int kMaxQubits = 6;

ComplexMatrix identity(std::size_t d);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);
ComplexMatrix maximally_mixed(std::size_t d);
/// |i><i| in dimension d.
ComplexMatrix basis_projector(std::size_t d, std::size_t i);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// a * m * a^dagger
ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& m);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = tol::kHermitian);
bool is_unitary(const ComplexMatrix& m, double tol = tol::kHermitian);
/// Smallest eigenvalue of the Hermitian part (M + M^dagger) / 2.
double min_eigenvalue(const ComplexMatrix& m);

/// Validated d x d quantum state: Hermitian, unit trace, positive
/// semidefinite. Immutable once built.
class DensityMatrix {
 public:
  /// Throws ValidityError (or DimensionError for non-square input).
  explicit DensityMatrix(ComplexMatrix mat);

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }
  double trace() const { return mat_.trace().real(); }
  /// <i|rho|i>
  double population(std::size_t i) const { return mat_(i, i).real(); }

 private:
  ComplexMatrix mat_;
};

/// The d^2 = 4^n Pauli strings on n qubits, identity string first.
/// Index digits in base 4 (0=I, 1=X, 2=Y, 3=Z), first qubit most
/// significant.
class UnitaryBasis {
 public:
  explicit UnitaryBasis(int qubits);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return std::size_t{1} << qubits_; }
  std::size_t size() const { return ops_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return ops_[i]; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

 private:
  int qubits_;
  std::vector<ComplexMatrix> ops_;
};

/// Throws DimensionError unless 1 <= n <= kMaxQubits.
UnitaryBasis pauli_basis(int qubits);

/// (1/d^2) sum_i U_i rho U_i^dagger; equals Tr(rho) I/d for any square rho.
ComplexMatrix twirl(const ComplexMatrix& rho, const UnitaryBasis& basis);

/// (1/d) sum_i Tr(U_i^dagger v) U_i; reconstructs v.
ComplexMatrix expand_in_basis(const ComplexMatrix& v, const UnitaryBasis& basis);

/// System register of dimension block_dim with `levels` control qubits
/// attached, stored as a 2^levels x 2^levels grid of block_dim blocks.
class BlockState {
 public:
  /// Throws DimensionError when mat is not (2^levels * block_dim) square,
  /// ValidityError when it is not Hermitian.
  BlockState(std::size_t block_dim, int levels, ComplexMatrix mat);

  std::size_t block_dim() const { return block_dim_; }
  int levels() const { return levels_; }
  std::size_t grid() const { return std::size_t{1} << levels_; }
  const ComplexMatrix& mat() const { return mat_; }
  /// Copy of the (row, col) d x d block.
  ComplexMatrix block(std::size_t row, std::size_t col) const;

 private:
  std::size_t block_dim_;
  int levels_;
  ComplexMatrix mat_;
};

/// Tr_{dxd}: 2^k x 2^k matrix of block traces. levels == 0 gives [Tr(mat)].
ComplexMatrix block_trace(const BlockState& state);

/// Traces out the outermost control. Throws DimensionError at levels == 0.
BlockState partial_trace_last_qubit(const BlockState& state);

/// Least-squares fit m ~ alpha * reference + beta * I/d in the Frobenius
/// norm. residual is the max-abs entry of the remainder.
struct AffineFit {
  double alpha = 0.0;
  double beta = 0.0;
  double residual = 0.0;
};
AffineFit affine_fit(const ComplexMatrix& m, const ComplexMatrix& reference);

/// Seeded random state A A^dagger / Tr(A A^dagger) with Gaussian A.
ComplexMatrix random_density(std::size_t d, std::uint64_t seed);
/// Seeded Gaussian complex matrix (not Hermitian).
ComplexMatrix random_matrix(std::size_t d, std::uint64_t seed);

}  // namespace sg
