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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace crda {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * Tensor product of single-qubit Pauli operators in the symplectic
 * (x-bits, z-bits) encoding. A site carries X when only its x-bit is set, Z
 * when only its z-bit is set and Y when both are set; the phase convention is
 * Y = i X Z so that every string is Hermitian.
 *
 * Qubit index 0 is the least significant bit of a computational basis index
 * and corresponds to the leftmost character of a label ("site 1").
 */
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(int nqubits);

  /// Parses a label such as "XIZY"; the first character is qubit 0.
  static PauliString from_label(std::string_view label);
  static PauliString single(int nqubits, int qubit, Pauli p);
  static PauliString pair(int nqubits, int q1, Pauli p1, int q2, Pauli p2);

  int nqubits() const { return n_; }
  std::uint64_t xbits() const { return x_; }
  std::uint64_t zbits() const { return z_; }

  Pauli at(int qubit) const;
  void set(int qubit, Pauli p);

  int weight() const;
  int y_count() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool commutes_with(const PauliString& other) const;

  std::string label() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int n_ = 0;
};

struct PauliTerm {
  PauliString string;
  Complex coeff{1.0, 0.0};
};

/// Exact product a*b as a single signed/phased Pauli term.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/**
 * Canonical sparse sum of Pauli strings with complex coefficients.
 *
 * Each string is stored at most once and coefficients with magnitude below
 * kPruneTolerance are dropped whenever a term is touched, so an operator that
 * cancels exactly compares equal to the empty sum.
 */
class PauliSum {
 public:
  static constexpr double kPruneTolerance = 1e-14;
  using TermMap = std::map<PauliString, Complex>;

  PauliSum() = default;
  explicit PauliSum(int nqubits);
  PauliSum(int nqubits, std::initializer_list<PauliTerm> terms);

  /// Builds from (label, coefficient) pairs; all labels must share a length.
  static PauliSum from_labels(
      std::initializer_list<std::pair<std::string_view, Complex>> terms);
  static PauliSum identity(int nqubits, Complex coeff = 1.0);

  int nqubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Complex coeff(const PauliString& s) const;
  Complex coeff(std::string_view label) const;

  void add(const PauliString& s, Complex c);
  void add(const PauliTerm& t) { add(t.string, t.coeff); }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Exact coefficient-wise equality (after pruning).
  friend bool operator==(const PauliSum& a, const PauliSum& b);

  /// True when every coefficient is real to within `tol` (absolute).
  bool is_hermitian(double tol = 1e-12) const;
  PauliSum adjoint() const;

  /// Largest coefficient magnitude, zero for the empty sum.
  double max_abs_coeff() const;

 private:
  void require_same_size(const PauliSum& other, const char* what) const;

  TermMap terms_;
  int n_ = 0;
};

/// ab - ba in canonical pruned form.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// max |a_P - b_P| over the union of supports.
double max_coeff_difference(const PauliSum& a, const PauliSum& b);

/// Sorted-label JSON: {"n": N, "terms": [{"p": "XZ", "re": r, "im": i}]}.
nlohmann::json to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const nlohmann::json& j);

}  // namespace crda
