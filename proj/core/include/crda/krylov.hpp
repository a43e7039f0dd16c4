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

#include "crda/linalg.hpp"

namespace crda {

struct LanczosResult {
  double value = 0.0;   // extreme eigenvalue of largest magnitude
  double residual = 0.0;
  int matvecs = 0;
};

/// Largest-magnitude eigenvalue of a Hermitian PauliSum by restarted Lanczos
/// with full reorthogonalization inside each cycle. The start vector is drawn
/// from a fixed-seed generator, so results are reproducible bit for bit.
LanczosResult lanczos_extreme(const PauliSum& h, double tolerance,
                              int max_iterations, int krylov_dim,
                              std::uint64_t seed);

/// Largest eigenvalue of h^dagger h (the squared spectral norm) for an
/// arbitrary PauliSum, same algorithm as lanczos_extreme.
LanczosResult lanczos_normal(const PauliSum& h, double tolerance,
                             int max_iterations, int krylov_dim,
                             std::uint64_t seed);

struct ExpmMultiplyOptions {
  double tolerance = 1e-12;
  int krylov_dim = 40;
  int max_substeps = 100000;
};

/// exp(-i h t) v for Hermitian h using Krylov projection with adaptive
/// substepping; never forms a dense matrix.
StateVector expm_multiply(const PauliSum& h, double t, const StateVector& v,
                          const ExpmMultiplyOptions& opts = {});

/// Fixed-seed complex Gaussian vector normalized to unit length.
StateVector random_state(int nqubits, std::uint64_t seed);

}  // namespace crda
