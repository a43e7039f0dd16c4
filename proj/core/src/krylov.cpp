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

#include "crda/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "crda/errors.hpp"

namespace crda {
namespace {

// Box-Muller on raw mt19937_64 output; std::normal_distribution is not
// specified bit for bit across standard libraries.
StateVector gaussian_vector(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    v[i] = Complex{r * std::cos(phi), r * std::sin(phi)};
  }
  return v;
}

struct TridiagonalEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

TridiagonalEigen tridiagonal_eigen(const std::vector<double>& alpha,
                                   const std::vector<double>& beta) {
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag(k);
  Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
  for (Eigen::Index i = 0; i < k; ++i) diag[i] = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  if (k == 1) {
    return {diag, Eigen::MatrixXd::Identity(1, 1)};
  }
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

template <class MatVec>
LanczosResult restarted_lanczos(MatVec&& matvec, Eigen::Index dim,
                                double tolerance, int max_iterations,
                                int krylov_dim, std::uint64_t seed) {
  StateVector v = gaussian_vector(dim, seed);
  v.normalize();
  const int m = static_cast<int>(std::min<Eigen::Index>(krylov_dim, dim));
  int matvecs = 0;

  for (;;) {
    std::vector<StateVector> basis{v};
    std::vector<double> alpha;
    std::vector<double> beta;
    TridiagonalEigen ritz;
    Eigen::Index best = 0;

    for (int j = 0; j < m; ++j) {
      StateVector w = matvec(basis.back());
      ++matvecs;
      const double a = basis.back().dot(w).real();
      alpha.push_back(a);
      w -= a * basis.back();
      if (j > 0) w -= beta.back() * basis[basis.size() - 2];
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) w -= q.dot(w) * q;
      }
      const double b = w.norm();

      ritz = tridiagonal_eigen(alpha, beta);
      ritz.values.cwiseAbs().maxCoeff(&best);
      const double theta = ritz.values[best];
      const double residual =
          b * std::abs(ritz.vectors(static_cast<Eigen::Index>(j), best));
      const double scale = std::max(std::abs(theta), 1e-300);

      if (residual <= tolerance * scale || b <= 1e-14 * scale ||
          static_cast<Eigen::Index>(j + 1) == dim) {
        return {theta, residual, matvecs};
      }
      if (matvecs >= max_iterations) {
        throw ComputeError("Lanczos did not converge within " +
                           std::to_string(max_iterations) +
                           " matrix-vector products (residual " +
                           std::to_string(residual) + ")");
      }
      beta.push_back(b);
      basis.push_back(w / b);
    }

    // Restart from the current extreme Ritz vector.
    StateVector next = StateVector::Zero(dim);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      next += ritz.vectors(static_cast<Eigen::Index>(i), best) * basis[i];
    }
    v = next.normalized();
  }
}

}  // namespace

StateVector random_state(int nqubits, std::uint64_t seed) {
  StateVector v = gaussian_vector(Eigen::Index{1} << nqubits, seed);
  v.normalize();
  return v;
}

LanczosResult lanczos_extreme(const PauliSum& h, double tolerance,
                              int max_iterations, int krylov_dim,
                              std::uint64_t seed) {
  if (h.empty()) return {};
  const auto dim = Eigen::Index{1} << h.nqubits();
  return restarted_lanczos([&h](const StateVector& x) { return crda::apply(h, x); },
                           dim, tolerance, max_iterations, krylov_dim, seed);
}

LanczosResult lanczos_normal(const PauliSum& h, double tolerance,
                             int max_iterations, int krylov_dim,
                             std::uint64_t seed) {
  if (h.empty()) return {};
  const auto dim = Eigen::Index{1} << h.nqubits();
  const PauliSum hd = h.adjoint();
  return restarted_lanczos(
      [&](const StateVector& x) { return crda::apply(hd, crda::apply(h, x)); }, dim,
      tolerance, max_iterations, krylov_dim, seed);
}

StateVector expm_multiply(const PauliSum& h, double t, const StateVector& v,
                          const ExpmMultiplyOptions& opts) {
  const auto dim = Eigen::Index{1} << h.nqubits();
  if (v.size() != dim) throw DomainError("expm_multiply: size mismatch");
  if (!h.is_hermitian(1e-12 * std::max(1.0, h.max_abs_coeff()))) {
    throw DomainError("expm_multiply: PauliSum is not Hermitian");
  }
  if (h.empty() || t == 0.0) return v;

  StateVector state = v;
  const double total = std::abs(t);
  const double sign = t < 0 ? -1.0 : 1.0;
  double done = 0.0;
  double dt = total;
  int steps = 0;

  while (done < total) {
    dt = std::min(dt, total - done);
    const double norm = state.norm();
    if (norm == 0.0) return state;

    std::vector<StateVector> basis{state / norm};
    std::vector<double> alpha;
    std::vector<double> beta;
    double last_beta = 0.0;
    const int m = static_cast<int>(std::min<Eigen::Index>(opts.krylov_dim, dim));
    for (int j = 0; j < m; ++j) {
      StateVector w = crda::apply(h, basis.back());
      const double a = basis.back().dot(w).real();
      alpha.push_back(a);
      w -= a * basis.back();
      if (j > 0) w -= beta.back() * basis[basis.size() - 2];
      for (const auto& q : basis) w -= q.dot(w) * q;
      last_beta = w.norm();
      if (last_beta < 1e-13 || j + 1 == m) break;
      beta.push_back(last_beta);
      basis.push_back(w / last_beta);
    }

    for (;;) {
      const auto ritz = tridiagonal_eigen(alpha, beta);
      const auto k = ritz.values.size();
      // y = S exp(-i dt Theta) S^T e1
      Eigen::VectorXcd coeffs(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        coeffs[i] = ritz.vectors(0, i) *
                    std::polar(1.0, -sign * dt * ritz.values[i]);
      }
      const Eigen::VectorXcd y = ritz.vectors.cast<Complex>() * coeffs;
      const double err = last_beta * std::abs(y[k - 1]);
      if (err <= opts.tolerance * std::max(dt / total, 1e-3) || last_beta < 1e-13) {
        StateVector next = StateVector::Zero(dim);
        for (Eigen::Index i = 0; i < k; ++i) {
          next += y[i] * basis[static_cast<std::size_t>(i)];
        }
        state = norm * next;
        done += dt;
        if (++steps > opts.max_substeps) {
          throw ComputeError("expm_multiply exceeded the substep budget");
        }
        dt *= 1.5;
        break;
      }
      dt *= 0.5;
      if (dt < 1e-14 * total) {
        throw ComputeError("expm_multiply: step size underflow");
      }
    }
  }
  return state;
}

}  // namespace crda
