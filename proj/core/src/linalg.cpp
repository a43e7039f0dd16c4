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

#include "crda/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "crda/errors.hpp"
#include "crda/krylov.hpp"

namespace crda {
namespace {

struct CompiledTerm {
  std::uint64_t flip;
  std::uint64_t zmask;
  Complex coeff;  // includes the i^{nY} phase
};

// P |c> = i^{nY} (-1)^{|z & c|} |c ^ x| with P = i^{nY} X^x Z^z.
std::vector<CompiledTerm> compile_terms(const PauliSum& h) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<CompiledTerm> out;
  out.reserve(h.size());
  for (const auto& [s, c] : h.terms()) {
    out.push_back({s.xbits(), s.zbits(), c * kIPow[s.y_count() % 4]});
  }
  return out;
}

void check_dense(int n, int limit, const char* what) {
  if (n > limit) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " qubits exceeds the dense limit of " +
                        std::to_string(limit));
  }
}

bool all_imaginary(const PauliSum& h, double tol) {
  return std::all_of(h.terms().begin(), h.terms().end(), [tol](const auto& kv) {
    return std::abs(kv.second.real()) <= tol;
  });
}

}  // namespace

DenseMatrix to_dense(const PauliSum& h, int dense_limit) {
  check_dense(h.nqubits(), dense_limit, "to_dense");
  const std::uint64_t dim = std::uint64_t{1} << h.nqubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& t : compile_terms(h)) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(t.zmask & c) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(c ^ t.flip), static_cast<Eigen::Index>(c)) +=
          sign * t.coeff;
    }
  }
  return m;
}

void apply_add(const PauliSum& h, const StateVector& v, StateVector& out) {
  const std::uint64_t dim = std::uint64_t{1} << h.nqubits();
  if (static_cast<std::uint64_t>(v.size()) != dim ||
      static_cast<std::uint64_t>(out.size()) != dim) {
    throw DomainError("apply: state dimension does not match 2^" +
                      std::to_string(h.nqubits()));
  }
  for (const auto& t : compile_terms(h)) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(t.zmask & c) & 1) ? -1.0 : 1.0;
      out[static_cast<Eigen::Index>(c ^ t.flip)] +=
          sign * t.coeff * v[static_cast<Eigen::Index>(c)];
    }
  }
}

StateVector apply(const PauliSum& h, const StateVector& v) {
  StateVector out = StateVector::Zero(v.size());
  apply_add(h, v, out);
  return out;
}

double frobenius_norm(const PauliSum& h, bool normalized) {
  // Distinct Pauli strings are orthonormal under tr(A^dagger B) / 2^N.
  double sum = 0.0;
  for (const auto& [s, c] : h.terms()) sum += std::norm(c);
  const double norm = std::sqrt(sum);
  return normalized ? norm : norm * std::pow(2.0, 0.5 * h.nqubits());
}

double frobenius_norm(const DenseMatrix& m, bool normalized) {
  const double norm = m.norm();
  return normalized ? norm / std::sqrt(static_cast<double>(m.rows())) : norm;
}

double spectral_norm(const DenseMatrix& m) {
  if (is_hermitian(m, 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<DenseMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double spectral_norm(const PauliSum& h, const SpectralNormOptions& opts) {
  if (h.empty()) return 0.0;
  const double tol = 1e-12 * std::max(1.0, h.max_abs_coeff());
  const bool hermitian = h.is_hermitian(tol);
  const bool anti_hermitian = !hermitian && all_imaginary(h, tol);

  if (!opts.force_matrix_free && h.nqubits() <= opts.dense_limit) {
    if (hermitian || anti_hermitian) {
      // ||C|| = max |eig(iC)| for anti-Hermitian C.
      const PauliSum herm = anti_hermitian ? h * Complex{0.0, 1.0} : h;
      DenseMatrix m = to_dense(herm, opts.dense_limit);
      Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m, Eigen::EigenvaluesOnly);
      return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    return spectral_norm(to_dense(h, opts.dense_limit));
  }

  if (hermitian || anti_hermitian) {
    const PauliSum herm = anti_hermitian ? h * Complex{0.0, 1.0} : h;
    return std::abs(lanczos_extreme(herm, opts.tolerance, opts.max_iterations,
                                    opts.krylov_dim, opts.seed)
                        .value);
  }
  return std::sqrt(lanczos_normal(h, opts.tolerance, opts.max_iterations,
                                  opts.krylov_dim, opts.seed)
                       .value);
}

DenseMatrix expm_hermitian(const DenseMatrix& h, double t) {
  if (!is_hermitian(h, 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
    throw DomainError("expm_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<Complex>() * Complex{0.0, -t}).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

DenseMatrix expm_hermitian(const PauliSum& h, double t, int dense_limit) {
  if (!h.is_hermitian(1e-12 * std::max(1.0, h.max_abs_coeff()))) {
    throw DomainError("expm_hermitian: PauliSum has complex coefficients");
  }
  check_dense(h.nqubits(), dense_limit, "expm_hermitian");
  if (h.empty()) {
    const auto dim = Eigen::Index{1} << h.nqubits();
    return DenseMatrix::Identity(dim, dim);
  }
  return expm_hermitian(to_dense(h, dense_limit), t);
}

double phase_insensitive_distance(const DenseMatrix& u, const DenseMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DomainError("phase_insensitive_distance: shape mismatch");
  }
  // The optimal phase aligns tr(V^dagger U) with the positive real axis.
  const Complex overlap = (v.conjugate().array() * u.array()).sum();
  const double theta = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  const Complex phase = std::polar(1.0, theta);
  return (u - phase * v).norm() / std::sqrt(static_cast<double>(u.rows()));
}

double unitarity_defect(const DenseMatrix& u) {
  const DenseMatrix d =
      u * u.adjoint() - DenseMatrix::Identity(u.rows(), u.cols());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(d, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_hermitian(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

StateVector basis_state(int nqubits, std::uint64_t index) {
  const auto dim = Eigen::Index{1} << nqubits;
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw DomainError("basis_state: index out of range");
  }
  StateVector v = StateVector::Zero(dim);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

Complex expectation(const PauliSum& h, const StateVector& v) {
  return v.dot(apply(h, v));
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace crda
