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

#include "crda/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "crda/errors.hpp"

namespace crda {
namespace {

// i^k for k taken mod 4.
Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_qubit(int qubit, int n) {
  if (qubit < 0 || qubit >= n) {
    throw DomainError("qubit index " + std::to_string(qubit) +
                      " out of range for " + std::to_string(n) + " qubits");
  }
}

}  // namespace

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw DomainError(std::string("invalid Pauli character '") + c + "'");
  }
}

PauliString::PauliString(int nqubits) : n_(nqubits) {
  if (nqubits < 1 || nqubits > kMaxQubits) {
    throw DomainError("Pauli string length must be in [1, 64], got " +
                      std::to_string(nqubits));
  }
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString s(static_cast<int>(label.size()));
  for (std::size_t q = 0; q < label.size(); ++q) {
    s.set(static_cast<int>(q), pauli_from_char(label[q]));
  }
  return s;
}

PauliString PauliString::single(int nqubits, int qubit, Pauli p) {
  PauliString s(nqubits);
  s.set(qubit, p);
  return s;
}

PauliString PauliString::pair(int nqubits, int q1, Pauli p1, int q2,
                              Pauli p2) {
  if (q1 == q2) throw DomainError("pair() needs two distinct qubits");
  PauliString s(nqubits);
  s.set(q1, p1);
  s.set(q2, p2);
  return s;
}

Pauli PauliString::at(int qubit) const {
  check_qubit(qubit, n_);
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
  check_qubit(qubit, n_);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  const int s = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (s % 2) == 0;
}

std::string PauliString::label() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = to_char(at(q));
  return out;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  const PauliString& sa = a.string;
  const PauliString& sb = b.string;
  if (sa.nqubits() != sb.nqubits()) {
    throw DomainError("multiply: Pauli strings of different lengths");
  }
  // P = i^{nY} X^x Z^z, and Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1.
  const std::uint64_t x = sa.xbits() ^ sb.xbits();
  const std::uint64_t z = sa.zbits() ^ sb.zbits();
  const int swaps = std::popcount(sa.zbits() & sb.xbits());
  const int phase = sa.y_count() + sb.y_count() + 2 * swaps - std::popcount(x & z);

  PauliString out(sa.nqubits());
  for (int q = 0; q < sa.nqubits(); ++q) {
    const bool xq = (x >> q) & 1U;
    const bool zq = (z >> q) & 1U;
    out.set(q, xq ? (zq ? Pauli::Y : Pauli::X) : (zq ? Pauli::Z : Pauli::I));
  }
  return {out, a.coeff * b.coeff * i_pow(phase)};
}

PauliSum::PauliSum(int nqubits) : n_(nqubits) {
  if (nqubits < 1 || nqubits > PauliString::kMaxQubits) {
    throw DomainError("PauliSum qubit count must be in [1, 64], got " +
                      std::to_string(nqubits));
  }
}

PauliSum::PauliSum(int nqubits, std::initializer_list<PauliTerm> terms)
    : PauliSum(nqubits) {
  for (const auto& t : terms) add(t);
}

PauliSum PauliSum::from_labels(
    std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  if (terms.size() == 0) throw DomainError("from_labels: no terms");
  PauliSum out(static_cast<int>(terms.begin()->first.size()));
  for (const auto& [label, c] : terms) out.add(PauliString::from_label(label), c);
  return out;
}

PauliSum PauliSum::identity(int nqubits, Complex coeff) {
  PauliSum out(nqubits);
  out.add(PauliString(nqubits), coeff);
  return out;
}

Complex PauliSum::coeff(const PauliString& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex PauliSum::coeff(std::string_view label) const {
  return coeff(PauliString::from_label(label));
}

void PauliSum::add(const PauliString& s, Complex c) {
  if (s.nqubits() != n_) {
    throw DomainError("PauliSum::add: string has " +
                      std::to_string(s.nqubits()) + " qubits, sum has " +
                      std::to_string(n_));
  }
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("PauliSum::add: non-finite coefficient");
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

void PauliSum::require_same_size(const PauliSum& other, const char* what) const {
  if (other.n_ != n_) {
    throw DomainError(std::string(what) + ": qubit counts differ (" +
                      std::to_string(n_) + " vs " + std::to_string(other.n_) + ")");
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_size(other, "operator+");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_size(other, "operator-");
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < kPruneTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  a.require_same_size(b, "operator*");
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      out.add(multiply({sa, ca}, {sb, cb}));
    }
  }
  return out;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) out.add(s, std::conj(c));
  return out;
}

double PauliSum::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.nqubits() != b.nqubits()) {
    throw DomainError("commutator: qubit counts differ");
  }
  PauliSum out(a.nqubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (sa.commutes_with(sb)) continue;
      // Anticommuting strings: [P, Q] = 2 P Q.
      PauliTerm t = multiply({sa, ca}, {sb, cb});
      t.coeff *= 2.0;
      out.add(t);
    }
  }
  return out;
}

double max_coeff_difference(const PauliSum& a, const PauliSum& b) {
  return (a - b).max_abs_coeff();
}

nlohmann::json to_json(const PauliSum& h) {
  std::vector<std::pair<std::string, Complex>> rows;
  rows.reserve(h.size());
  for (const auto& [s, c] : h.terms()) rows.emplace_back(s.label(), c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : rows) {
    terms.push_back({{"p", p}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n", h.nqubits()}, {"terms", terms}};
}

PauliSum pauli_sum_from_json(const nlohmann::json& j) {
  try {
    PauliSum out(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto label = t.at("p").get<std::string>();
      const double re = t.value("re", 0.0);
      const double im = t.value("im", 0.0);
      out.add(PauliString::from_label(label), {re, im});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed PauliSum JSON: ") + e.what());
  }
}

}  // namespace crda
