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

#include "crda/hamiltonians.hpp"
#include "crda/linalg.hpp"

namespace crda {

struct IntegratorOptions {
  /// Initial step satisfies h * max||V(t)|| <= norm_step ...
  double norm_step = 0.05;
  /// ... and h <= (2 pi / f_max) / samples_per_period.
  int samples_per_period = 40;
  /// A result is accepted once halving the step changes the propagator by
  /// less than this (normalized Frobenius norm).
  double tolerance = 1e-8;
  int max_halvings = 12;
  long max_steps = 50'000'000;
  int dense_limit = kDefaultDenseLimit;
};

struct PropagationResult {
  DenseMatrix propagator;
  long steps = 0;            // steps of the accepted (finest) pass
  int halvings = 0;          // refinements performed after the first pass
  double halving_change = 0.0;
};

/// One fixed-step pass of the fourth-order commutator-free Magnus
/// integrator from t0 to t1. When `h.diagonal_part` is non-empty the
/// evolution is carried out in its interaction picture and mapped back.
DenseMatrix propagate_fixed(const TimeDependentHamiltonian& h, double t0,
                            double t1, long steps,
                            int dense_limit = kDefaultDenseLimit);

/// Adaptive wrapper: starts from the step rule in `opts` and halves until
/// successive passes agree to `opts.tolerance`. Throws ComputeError if the
/// halving budget or step budget is exhausted first.
PropagationResult propagate(const TimeDependentHamiltonian& h, double t0,
                            double t1, const IntegratorOptions& opts = {});

/// Same integrator applied to a state vector without forming the
/// propagator; used for time-dependent schedule segments.
StateVector propagate_state(const TimeDependentHamiltonian& h, double t0,
                            double t1, const StateVector& psi, long steps);

}  // namespace crda
