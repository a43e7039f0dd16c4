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

// Independent dense reference constructions used as test oracles. Nothing
// here calls into the library's own dense conversion, so agreement with the
// library is a genuine cross-check.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace crda::oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M pauli(char c) {
  M m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Matrix of a label; character 0 acts on qubit 0, the least significant
/// bit of the basis index, so it is the rightmost Kronecker factor.
inline M label_matrix(const std::string& label) {
  M out = M::Identity(1, 1);
  for (char c : label) out = kron(pauli(c), out);
  return out;
}

inline M embed(const M& single, int qubit, int n) {
  M out = M::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    out = kron(q == qubit ? single : M::Identity(2, 2), out);
  }
  return out;
}

inline std::string random_label(int n, std::mt19937_64& rng) {
  static const char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (int q = 0; q < n; ++q) s += letters[rng() % 4];
  return s;
}

inline double frob_normalized(const M& m) {
  return std::sqrt(m.squaredNorm() / static_cast<double>(m.rows()));
}

inline double spectral(const M& m) {
  Eigen::JacobiSVD<M> svd(m);
  return svd.singularValues()(0);
}

inline M expm_herm(const M& h, double t) {
  Eigen::SelfAdjointEigenSolver<M> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<C>() * C(0, -t)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace crda::oracle
