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

#include <random>

#include <gtest/gtest.h>

#include "crda/errors.hpp"
#include "crda/linalg.hpp"
#include "crda/pauli.hpp"
#include "oracles.hpp"

namespace crda {
namespace {

TEST(PauliString, LabelRoundTripAndQubitOrder) {
  const PauliString s = PauliString::from_label("XIYZ");
  EXPECT_EQ(s.nqubits(), 4);
  EXPECT_EQ(s.at(0), Pauli::X);
  EXPECT_EQ(s.at(1), Pauli::I);
  EXPECT_EQ(s.at(2), Pauli::Y);
  EXPECT_EQ(s.at(3), Pauli::Z);
  EXPECT_EQ(s.label(), "XIYZ");
  EXPECT_EQ(s.weight(), 3);
  EXPECT_EQ(s.y_count(), 1);
  EXPECT_EQ(s.xbits(), 0b0101U);
  EXPECT_EQ(s.zbits(), 0b1100U);
}

TEST(PauliString, RejectsBadInput) {
  EXPECT_THROW(PauliString::from_label("XQ"), DomainError);
  EXPECT_THROW(PauliString(65), DomainError);
  EXPECT_THROW(PauliString::single(2, 2, Pauli::X), DomainError);
}

TEST(PauliString, SingleQubitMatricesMatchConvention) {
  for (const char c : {'X', 'Y', 'Z'}) {
    const PauliSum h(1, {{PauliString::from_label(std::string(1, c)), 1.0}});
    EXPECT_LT((to_dense(h) - oracle::pauli(c)).norm(), 1e-15) << c;
  }
}

TEST(PauliAlgebra, ProductsMatchDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string la = oracle::random_label(3, rng);
    const std::string lb = oracle::random_label(3, rng);
    const PauliTerm a{PauliString::from_label(la), {0.3, -0.2}};
    const PauliTerm b{PauliString::from_label(lb), {-1.1, 0.7}};
    const PauliTerm ab = multiply(a, b);
    const oracle::M want = a.coeff * b.coeff * oracle::label_matrix(la) *
                           oracle::label_matrix(lb);
    const oracle::M got = ab.coeff * oracle::label_matrix(ab.string.label());
    EXPECT_LT((want - got).norm(), 1e-12) << la << " * " << lb;
  }
}

TEST(PauliAlgebra, CommutationMatchesDenseOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string la = oracle::random_label(4, rng);
    const std::string lb = oracle::random_label(4, rng);
    const oracle::M a = oracle::label_matrix(la), b = oracle::label_matrix(lb);
    const bool commute = (a * b - b * a).norm() < 1e-12;
    EXPECT_EQ(PauliString::from_label(la).commutes_with(PauliString::from_label(lb)),
              commute);
  }
}

PauliSum random_sum(int n, int terms, std::mt19937_64& rng, bool hermitian) {
  std::normal_distribution<double> nd;
  PauliSum h(n);
  for (int k = 0; k < terms; ++k) {
    const Complex c = hermitian ? Complex{nd(rng), 0.0} : Complex{nd(rng), nd(rng)};
    h.add(PauliString::from_label(oracle::random_label(n, rng)), c);
  }
  return h;
}

TEST(PauliSum, CancellationPrunesToEmpty) {
  PauliSum h = PauliSum::from_labels({{"XZ", 1.0}, {"YY", 2.0}});
  h -= PauliSum::from_labels({{"XZ", 1.0}, {"YY", 2.0}});
  EXPECT_TRUE(h.empty());
  EXPECT_EQ(h, PauliSum(2));
  h.add(PauliString::from_label("ZZ"), 1e-15);
  EXPECT_TRUE(h.empty());
}

TEST(PauliSum, CommutatorProperties) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliSum a = random_sum(3, 5, rng, true);
    const PauliSum b = random_sum(3, 5, rng, true);
    const PauliSum c = random_sum(3, 5, rng, true);
    EXPECT_LT(max_coeff_difference(commutator(a, b), commutator(b, a) * Complex{-1.0}),
              1e-12);
    const PauliSum jacobi = commutator(a, commutator(b, c)) +
                            commutator(b, commutator(c, a)) +
                            commutator(c, commutator(a, b));
    EXPECT_LT(jacobi.max_abs_coeff(), 1e-10);
    // The commutator of Hermitian operators is anti-Hermitian.
    const PauliSum k = commutator(a, b) * Complex{0.0, 1.0};
    EXPECT_TRUE(k.is_hermitian(1e-12));
    const oracle::M da = to_dense(a), db = to_dense(b);
    EXPECT_LT((to_dense(commutator(a, b)) - (da * db - db * da)).norm(), 1e-10);
  }
}

TEST(PauliSum, ProductMatchesDense) {
  std::mt19937_64 rng(14);
  const PauliSum a = random_sum(3, 6, rng, false);
  const PauliSum b = random_sum(3, 6, rng, false);
  EXPECT_LT((to_dense(a * b) - to_dense(a) * to_dense(b)).norm(), 1e-10);
  EXPECT_LT((to_dense(a.adjoint()) - to_dense(a).adjoint()).norm(), 1e-12);
}

TEST(PauliSum, SizeMismatchThrows) {
  PauliSum a(2), b(3);
  EXPECT_THROW(a += b, DomainError);
  EXPECT_THROW(commutator(a, b), DomainError);
}

TEST(PauliSum, JsonRoundTrip) {
  const PauliSum h = PauliSum::from_labels({{"XZI", {0.5, 0.0}}, {"IYY", {0.0, -2.0}}});
  const PauliSum back = pauli_sum_from_json(to_json(h));
  EXPECT_EQ(back, h);
  EXPECT_EQ(back.nqubits(), 3);
}

}  // namespace
}  // namespace crda
