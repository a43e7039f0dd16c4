// Copyright 2026 The crda Authors
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

#include <cstdint>

#include <Eigen/Dense>

#include "crda/pauli.hpp"

namespace crda {

using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest qubit count for which 2^N x 2^N matrices are materialized.
inline constexpr int kDefaultDenseLimit = 12;

/// Dense matrix of `h` with qubit 0 as the least significant index bit.
DenseMatrix to_dense(const PauliSum& h, int dense_limit = kDefaultDenseLimit);

/// Matrix-free h*v.
StateVector apply(const PauliSum& h, const StateVector& v);

/// Accumulates h*v into `out` (out += h*v) without allocating.
void apply_add(const PauliSum& h, const StateVector& v, StateVector& out);

/// Frobenius norm; `normalized` uses the tr(1) = 1 convention.
double frobenius_norm(const PauliSum& h, bool normalized);
double frobenius_norm(const DenseMatrix& m, bool normalized);

struct SpectralNormOptions {
  int dense_limit = kDefaultDenseLimit;
  bool force_matrix_free = false;
  double tolerance = 1e-8;
  int max_iterations = 10000;
  int krylov_dim = 80;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Largest singular value. Dense eigensolve up to `dense_limit` qubits,
/// restarted Lanczos otherwise (on h directly when Hermitian, on h^dagger h
/// when not). Throws ComputeError if Lanczos does not converge.
double spectral_norm(const PauliSum& h, const SpectralNormOptions& opts = {});
double spectral_norm(const DenseMatrix& m);

/// exp(-i h t) for Hermitian h via eigendecomposition.
DenseMatrix expm_hermitian(const PauliSum& h, double t,
                           int dense_limit = kDefaultDenseLimit);
DenseMatrix expm_hermitian(const DenseMatrix& h, double t);

/// min over theta of the normalized Frobenius norm ||U - e^{i theta} V||.
double phase_insensitive_distance(const DenseMatrix& u, const DenseMatrix& v);

/// Spectral norm of U U^dagger - 1.
double unitarity_defect(const DenseMatrix& u);

/// True when `m` equals its adjoint to within `tol` entrywise.
bool is_hermitian(const DenseMatrix& m, double tol = 1e-12);

StateVector basis_state(int nqubits, std::uint64_t index);

/// <v| h |v> (v need not be normalized).
Complex expectation(const PauliSum& h, const StateVector& v);

/// Kronecker product with `a` on the more significant qubits.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace crda
