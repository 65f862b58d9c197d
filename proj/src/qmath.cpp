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

#include "switchgrover/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "switchgrover/errors.hpp"

namespace sg {

namespace {

const ComplexMatrix& single_qubit_pauli(int which) {
  static const ComplexMatrix paulis[4] = {
      (ComplexMatrix(2, 2) << 1, 0, 0, 1).finished(),
      (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished(),
      (ComplexMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  return paulis[which];
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

ComplexMatrix identity(std::size_t d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix::Zero(rows, cols);
}

ComplexMatrix maximally_mixed(std::size_t d) {
  return identity(d) / static_cast<double>(d);
}

ComplexMatrix basis_projector(std::size_t d, std::size_t i) {
  if (i >= d) throw DimensionError("basis_projector: index out of range");
  ComplexMatrix p = zeros(d, d);
  p(i, i) = 1.0;
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& m) {
  return a * m * a.adjoint();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  return m.unaryExpr([](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); })
      .all();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m.adjoint() * m, identity(static_cast<std::size_t>(m.rows()))) <= tol;
}

double min_eigenvalue(const ComplexMatrix& m) {
  require_square(m, "min_eigenvalue");
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  if (!all_finite(mat_)) throw ValidityError("DensityMatrix: non-finite entry");
  if (!is_hermitian(mat_)) throw ValidityError("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > tol::kTrace) {
    throw ValidityError("DensityMatrix: trace is not 1");
  }
  if (min_eigenvalue(mat_) < -tol::kPsd) {
    throw ValidityError("DensityMatrix: negative eigenvalue");
  }
}

UnitaryBasis::UnitaryBasis(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw DimensionError("pauli_basis: qubit count must be in [1, " + std::to_string(kMaxQubits) +
                         "], got " + std::to_string(qubits));
  }
  const std::size_t count = std::size_t{1} << (2 * qubits);
  ops_.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    ComplexMatrix op = ComplexMatrix::Ones(1, 1);
    for (int q = qubits - 1; q >= 0; --q) {
      op = kron(op, single_qubit_pauli(static_cast<int>((index >> (2 * q)) & 3U)));
    }
    ops_.push_back(std::move(op));
  }
}

UnitaryBasis pauli_basis(int qubits) { return UnitaryBasis(qubits); }

ComplexMatrix twirl(const ComplexMatrix& rho, const UnitaryBasis& basis) {
  require_square(rho, "twirl");
  const auto d = basis.dim();
  if (static_cast<std::size_t>(rho.rows()) != d) {
    throw DimensionError("twirl: matrix dimension does not match basis");
  }
  ComplexMatrix acc = zeros(d, d);
  for (const auto& u : basis.ops()) acc += conjugate(u, rho);
  return acc / static_cast<double>(d * d);
}

ComplexMatrix expand_in_basis(const ComplexMatrix& v, const UnitaryBasis& basis) {
  require_square(v, "expand_in_basis");
  const auto d = basis.dim();
  if (static_cast<std::size_t>(v.rows()) != d) {
    throw DimensionError("expand_in_basis: matrix dimension does not match basis");
  }
  ComplexMatrix acc = zeros(d, d);
  for (const auto& u : basis.ops()) acc += (u.adjoint() * v).trace() * u;
  return acc / static_cast<double>(d);
}

BlockState::BlockState(std::size_t block_dim, int levels, ComplexMatrix mat)
    : block_dim_(block_dim), levels_(levels), mat_(std::move(mat)) {
  if (block_dim == 0 || levels < 0 || levels > 16) {
    throw DimensionError("BlockState: invalid block dimension or level count");
  }
  const auto expected = static_cast<Eigen::Index>((std::size_t{1} << levels) * block_dim);
  if (mat_.rows() != expected || mat_.cols() != expected) {
    throw DimensionError("BlockState: matrix must be " + std::to_string(expected) + " square");
  }
  if (!is_hermitian(mat_)) throw ValidityError("BlockState: not Hermitian");
}

ComplexMatrix BlockState::block(std::size_t row, std::size_t col) const {
  if (row >= grid() || col >= grid()) throw DimensionError("BlockState::block: out of range");
  const auto d = static_cast<Eigen::Index>(block_dim_);
  return mat_.block(static_cast<Eigen::Index>(row) * d, static_cast<Eigen::Index>(col) * d, d, d);
}

ComplexMatrix block_trace(const BlockState& state) {
  const auto n = state.grid();
  const auto d = static_cast<Eigen::Index>(state.block_dim());
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = state.mat()
                      .block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d)
                      .trace();
    }
  }
  return out;
}

BlockState partial_trace_last_qubit(const BlockState& state) {
  if (state.levels() == 0) {
    throw DimensionError("partial_trace_last_qubit: no control qubit to trace out");
  }
  const auto half = state.mat().rows() / 2;
  ComplexMatrix reduced = state.mat().topLeftCorner(half, half) + state.mat().bottomRightCorner(half, half);
  return BlockState(state.block_dim(), state.levels() - 1, std::move(reduced));
}

AffineFit affine_fit(const ComplexMatrix& m, const ComplexMatrix& reference) {
  require_square(m, "affine_fit");
  if (m.rows() != reference.rows() || m.cols() != reference.cols()) {
    throw DimensionError("affine_fit: shape mismatch");
  }
  const auto d = static_cast<std::size_t>(m.rows());
  const ComplexMatrix mixed = maximally_mixed(d);
  auto inner = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a.conjugate().cwiseProduct(b)).sum().real();
  };
  const double g00 = inner(reference, reference);
  const double g01 = inner(reference, mixed);
  const double g11 = inner(mixed, mixed);
  const double b0 = inner(reference, m);
  const double b1 = inner(mixed, m);
  const double det = g00 * g11 - g01 * g01;
  AffineFit fit;
  if (std::abs(det) <= 1e-14 * g00 * g11) {
    // reference is proportional to the identity; only the identity weight is defined
    fit.beta = b1 / g11;
  } else {
    fit.alpha = (b0 * g11 - b1 * g01) / det;
    fit.beta = (g00 * b1 - g01 * b0) / det;
  }
  fit.residual = (m - fit.alpha * reference - fit.beta * mixed).cwiseAbs().maxCoeff();
  return fit;
}

ComplexMatrix random_matrix(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

ComplexMatrix random_density(std::size_t d, std::uint64_t seed) {
  const ComplexMatrix a = random_matrix(d, seed);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  // exact Hermitian symmetry, so DensityMatrix accepts it at 1e-12
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace sg
