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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "crda/device.hpp"
#include "crda/integrator.hpp"
#include "crda/linalg.hpp"
#include "crda/pauli.hpp"

namespace crda {

using Matrix2 = Eigen::Matrix2cd;

/// Single-qubit gates used to toggle the analog Hamiltonian.
/// Rx90 = exp(-i pi x / 4), S = diag(1, i), UE = (1 - i(x + y + z)) / 2.
enum class GateKind { Identity, Hadamard, Rx90, Rx90Dag, S, UE, UEDag, UE2 };

std::string to_string(GateKind g);
GateKind gate_kind_from_string(std::string_view s);
Matrix2 gate_matrix(GateKind g);
GateKind inverse(GateKind g);

/// Sites a gate layer acts on. Even/Odd refer to 1-based chain positions
/// (Even = sites 2, 4, ... = qubit indices 1, 3, ...).
struct Support {
  enum class Kind { All, Even, Odd, Explicit };
  Kind kind = Kind::All;
  std::vector<int> qubits;  // only for Explicit, sorted

  static Support all() { return {}; }
  static Support even() { return {Kind::Even, {}}; }
  static Support odd() { return {Kind::Odd, {}}; }
  static Support sites(std::vector<int> qubits);

  std::vector<int> resolve(int n) const;
  std::string describe() const;
  friend bool operator==(const Support&, const Support&) = default;
};

struct GateLayer {
  GateKind kind = GateKind::Identity;
  Support support;

  GateLayer inverse() const { return {crda::inverse(kind), support}; }
  friend bool operator==(const GateLayer&, const GateLayer&) = default;
};

/// Image of each Pauli under conjugation u^dagger P u, for Clifford u.
struct SiteClifford {
  std::array<Pauli, 4> image{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  std::array<int, 4> sign{1, 1, 1, 1};

  /// Map of the composite (a then b in time): (ba)^dagger P (ba).
  static SiteClifford compose(const SiteClifford& first, const SiteClifford& second);
  bool is_identity() const;
};

/// Derives the conjugation table of a single-qubit unitary numerically;
/// throws DomainError if u is not Clifford (up to a global phase).
SiteClifford clifford_map(const Matrix2& u);

/// Per-site unitaries of a whole register (identity where untouched).
struct SiteOperators {
  std::vector<Matrix2> ops;

  static SiteOperators identity(int n);
  static SiteOperators from_layer(const GateLayer& l, int n);
  /// Appends a later layer: ops[q] <- later.ops[q] * ops[q].
  void then(const SiteOperators& later);
  bool is_identity(double tol = 1e-12) const;
};

DenseMatrix layer_unitary(const GateLayer& l, int n,
                          int dense_limit = kDefaultDenseLimit);
DenseMatrix site_operators_unitary(const SiteOperators& s,
                                   int dense_limit = kDefaultDenseLimit);

/// U^dagger h U for a layer U, exact at the PauliSum level.
PauliSum toggle(const PauliSum& h, const GateLayer& l);
PauliSum toggle(const PauliSum& h, const SiteOperators& s);

/// Applies per-site operators to a state in place without a dense matrix.
void apply_site_operators(const SiteOperators& s, StateVector& v);

// --- Rotating-frame pipeline -------------------------------------------

/// exp(-(i/2) sum_k (omega_k t + phi_k) z_k)
DenseMatrix frame_u12(const DeviceParams& p, double t);
/// exp((i/2) sum_k xi_k y_k), xi_k = atan2(delta_k, Omega_k)
DenseMatrix frame_u3(const DeviceParams& p);
/// exp(-(i t/2) sum_k eta_k x_k)
DenseMatrix frame_u4(const DeviceParams& p, double t);
/// U_F(t) = U_12(t) U_3 U_4(t).
DenseMatrix frame_pipeline_unitary(const DeviceParams& p, double t);

/// H_F = U_F^dagger H U_F - i U_F^dagger dU_F/dt for the lab Hamiltonian,
/// with the derivative evaluated analytically.
DenseMatrix frame_hamiltonian(const DeviceParams& p, double t);

/// Largest deviation, over a few sample times, between the analytic frame
/// derivative and a central finite difference of U_F (relative to ||U_F'||).
double frame_identity_residual(const DeviceParams& p, double t);

/// Product over control qubits (nonzero detuning) of the first-order
/// factor (1/sqrt2)[1 + i y + (Omega/2delta)((1 - i y) cos(delta t)
/// + i (z - x) sin(delta t))]; identity on the remaining qubits.
DenseMatrix uqf_approx(const DeviceParams& p, double t);

struct FrameVerification {
  double distance_frame = 0.0;  // U_F(t)^dag U_lab U_F(0) vs exp(-i H_QF t)
  double distance_lab = 0.0;    // U_lab vs U_F(t) exp(-i H_QF t) U_F(0)^dag
  double omega_ratio = 0.0;
  double coupling_ratio = 0.0;
  long steps = 0;
  double halving_change = 0.0;
  PauliSum effective;
};

/// Integrates the lab-frame evolution and compares it with the static
/// quad-frame effective Hamiltonian (undriven-target form on bonds whose
/// target carries no drive). Requires 2 <= n <= dense limit.
FrameVerification verify_effective(const DeviceParams& p, double t_final,
                                   const IntegratorOptions& opts = {});

struct ScalingPoint {
  double factor = 1.0;
  FrameVerification result;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  double exponent = 0.0;  // least-squares slope of log distance vs log factor
};

/// Scales both g and Omega by each factor and refits the distance law.
ScalingReport verify_effective_scaling(const DeviceParams& p, double t_final,
                                       const std::vector<double>& factors,
                                       const IntegratorOptions& opts = {});

nlohmann::json to_json(const FrameVerification& v);
nlohmann::json to_json(const ScalingReport& r);

}  // namespace crda
