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

#include "crda/integrator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "crda/errors.hpp"
#include "crda/krylov.hpp"

namespace crda {
namespace {

// Fourth-order commutator-free Magnus scheme with two Gauss-Legendre nodes.
const double kSqrt3 = std::sqrt(3.0);
const double kC1 = 0.5 - kSqrt3 / 6.0;
const double kC2 = 0.5 + kSqrt3 / 6.0;
const double kA1 = (3.0 - 2.0 * kSqrt3) / 12.0;
const double kA2 = (3.0 + 2.0 * kSqrt3) / 12.0;

/// Evaluates the generator (minus its diagonal part) as a dense matrix in
/// the interaction picture of the diagonal part.
class DenseGenerator {
 public:
  DenseGenerator(const TimeDependentHamiltonian& h, int dense_limit)
      : h_(h), dense_limit_(dense_limit) {
    if (h.nqubits > dense_limit) {
      throw ResourceError("dense propagation limited to " +
                          std::to_string(dense_limit) + " qubits");
    }
    const auto dim = Eigen::Index{1} << h.nqubits;
    energies_ = Eigen::VectorXd::Zero(dim);
    if (!h.diagonal_part.empty()) {
      for (const auto& [s, c] : h.diagonal_part.terms()) {
        if (s.xbits() != 0) {
          throw DomainError("diagonal_part contains an off-diagonal string");
        }
        for (Eigen::Index b = 0; b < dim; ++b) {
          const int parity = std::popcount(static_cast<std::uint64_t>(b) & s.zbits()) & 1;
          energies_[b] += (parity ? -1.0 : 1.0) * c.real();
        }
      }
      interaction_ = true;
    }
  }

  bool interaction() const { return interaction_; }
  const Eigen::VectorXd& energies() const { return energies_; }

  DenseMatrix operator()(double t) const {
    PauliSum v = h_(t);
    if (interaction_) v -= h_.diagonal_part;
    DenseMatrix m = to_dense(v, dense_limit_);
    if (interaction_) {
      for (Eigen::Index a = 0; a < m.rows(); ++a) {
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
          m(a, b) *= std::polar(1.0, (energies_[a] - energies_[b]) * t);
        }
      }
    }
    return m;
  }

  /// exp(-i D t) as a diagonal.
  Eigen::VectorXcd phases(double t) const {
    Eigen::VectorXcd p(energies_.size());
    for (Eigen::Index a = 0; a < p.size(); ++a) p[a] = std::polar(1.0, -energies_[a] * t);
    return p;
  }

 private:
  const TimeDependentHamiltonian& h_;
  int dense_limit_;
  Eigen::VectorXd energies_;
  bool interaction_ = false;
};

DenseMatrix expm_step(const DenseMatrix& h, double dt) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  const Eigen::VectorXcd ph =
      (es.eigenvalues().cast<Complex>() * Complex(0.0, -dt)).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double generator_norm_bound(const TimeDependentHamiltonian& h, double t0,
                            double t1) {
  double bound = 0.0;
  for (int i = 0; i <= 8; ++i) {
    PauliSum v = h(t0 + (t1 - t0) * i / 8.0);
    if (!h.diagonal_part.empty()) v -= h.diagonal_part;
    double s = 0.0;
    for (const auto& [str, c] : v.terms()) s += std::abs(c);
    bound = std::max(bound, s);
  }
  return bound;
}

}  // namespace

DenseMatrix propagate_fixed(const TimeDependentHamiltonian& h, double t0,
                            double t1, long steps, int dense_limit) {
  if (steps < 1) throw DomainError("propagate_fixed needs at least one step");
  const DenseGenerator gen(h, dense_limit);
  const auto dim = Eigen::Index{1} << h.nqubits;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  const double dt = (t1 - t0) / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) {
    const double t = t0 + dt * static_cast<double>(s);
    const DenseMatrix h1 = gen(t + kC1 * dt);
    const DenseMatrix h2 = gen(t + kC2 * dt);
    u = expm_step(kA2 * h1 + kA1 * h2, dt) * u;
    u = expm_step(kA1 * h1 + kA2 * h2, dt) * u;
  }
  if (gen.interaction()) {
    // U(t1, t0) = exp(-i D t1) U_I exp(i D t0)
    u = gen.phases(t1).asDiagonal() * u * gen.phases(-t0).asDiagonal();
  }
  return u;
}

PropagationResult propagate(const TimeDependentHamiltonian& h, double t0,
                            double t1, const IntegratorOptions& opts) {
  const double span = std::abs(t1 - t0);
  if (span == 0.0) {
    const auto dim = Eigen::Index{1} << h.nqubits;
    return {DenseMatrix::Identity(dim, dim), 0, 0, 0.0};
  }
  const double norm = std::max(generator_norm_bound(h, t0, t1), 1e-300);
  double fmax = h.max_frequency();
  if (!h.diagonal_part.empty()) fmax *= 2.0;
  double step = opts.norm_step / norm;
  if (fmax > 0.0) {
    step = std::min(step, 2.0 * std::numbers::pi / (fmax * opts.samples_per_period));
  }
  long steps = std::max<long>(1, static_cast<long>(std::ceil(span / step)));

  PropagationResult r;
  DenseMatrix coarse = propagate_fixed(h, t0, t1, steps, opts.dense_limit);
  for (int k = 1; k <= opts.max_halvings; ++k) {
    steps *= 2;
    if (steps > opts.max_steps) break;
    DenseMatrix fine = propagate_fixed(h, t0, t1, steps, opts.dense_limit);
    const double change = frobenius_norm(DenseMatrix(fine - coarse), true);
    r.propagator = std::move(fine);
    r.steps = steps;
    r.halvings = k;
    r.halving_change = change;
    if (change < opts.tolerance) return r;
    coarse = r.propagator;
  }
  throw ComputeError("time integration did not converge: halving change " +
                     std::to_string(r.halving_change) + " after " +
                     std::to_string(r.steps) + " steps");
}

StateVector propagate_state(const TimeDependentHamiltonian& h, double t0,
                            double t1, const StateVector& psi, long steps) {
  if (steps < 1) throw DomainError("propagate_state needs at least one step");
  const double dt = (t1 - t0) / static_cast<double>(steps);
  StateVector v = psi;
  ExpmMultiplyOptions eo;
  for (long s = 0; s < steps; ++s) {
    const double t = t0 + dt * static_cast<double>(s);
    const PauliSum h1 = h(t + kC1 * dt);
    const PauliSum h2 = h(t + kC2 * dt);
    v = expm_multiply(kA2 * h1 + kA1 * h2, dt, v, eo);
    v = expm_multiply(kA1 * h1 + kA2 * h2, dt, v, eo);
  }
  return v;
}

}  // namespace crda
