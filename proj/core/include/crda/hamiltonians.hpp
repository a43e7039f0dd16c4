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

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crda/device.hpp"
#include "crda/pauli.hpp"

namespace crda {

enum class HamiltonianKind {
  LabFrame2Q,
  LabFrameNQ,
  QF_Effective,
  QF_EffectiveOdd,
  QF_EffectiveEven,
  Control,
  Org,
  DeltaH,
  H_Even,
  H_Odd,
  H_EvenPrime,
  H_OddPrime,
  H1,
  H2,
  H_ZZ,
  H_XY_1D,
  H_2D_Odd,
  H_2D_Even,
  H_I,
  H_II,
  H_XY_2D,
  H_E,
  H_E_Prime,
  H_E_DoublePrime,
  H_Heis,
  Org_XY,
  Delta_XY,
  Org_ZZ,
  Delta_ZZ,
};

/// Snake-case name used on the command line, e.g. "h_even", "delta_xy".
std::string to_string(HamiltonianKind k);
HamiltonianKind hamiltonian_kind_from_string(std::string_view s);
std::vector<HamiltonianKind> all_hamiltonian_kinds();

bool is_time_dependent(HamiltonianKind k);
bool is_two_dimensional(HamiltonianKind k);

/// Hamiltonian as a function of time together with the angular frequencies
/// that appear in it, which integrators use to bound their step size.
struct TimeDependentHamiltonian {
  int nqubits = 0;
  std::function<PauliSum(double)> generator;
  std::vector<double> frequencies;
  /// Optional static z-only part of the generator; integrators use it as an
  /// exactly solvable interaction picture. Empty when unknown.
  PauliSum diagonal_part;

  PauliSum operator()(double t) const { return generator(t); }
  double max_frequency() const;
};

/// Lab-frame Hamiltonian of a driven chain with transverse coupling:
/// sum_k [omega_q_k z_k / 2 + Omega_k cos(omega_k t + phi_k) x_k]
///   + sum_k g_k x_k x_{k+1} / 2.
PauliSum build_lab_frame(const DeviceParams& p, double t);
TimeDependentHamiltonian lab_frame_hamiltonian(const DeviceParams& p);

/**
 * Static cross-resonance Hamiltonian in the quad frame.
 *
 * All-driven: sum_k (g_k Omega_k / 4 delta_k) x_k (y_{k+1} sin dphi_k
 * - z_{k+1} cos dphi_k) with dphi_k = phi_k - phi_{k+1}, which is
 * sum_k J_k x_k z_{k+1} for uniform phases.
 * Odd/even-only: sum over controls of (g Omega / 4 delta)
 * x_k (x_{k+1} cos phi_k + y_{k+1} sin phi_k); the targets are undriven.
 * Throws DomainError when a qubit that must be a target is driven.
 */
PauliSum build_qf_effective(const DeviceParams& p, const DriveConfig& d);

/// Effective two-qubit interaction of bond k in the frame where qubit k is
/// the control: the undriven-target form when qubit k+1 is not driven and
/// the driven-target form otherwise. Sum over all driven controls.
PauliSum build_qf_effective_mixed(const DeviceParams& p);

/// Time-independent family member with coupling J on lattice `lat`.
/// The 2D control Hamiltonian (QF_Effective / Control on a 2D lattice) is
/// J sum_c x_c (z_{c+i} + z_{c+j}).
PauliSum build_canonical(HamiltonianKind kind, const Lattice& lat, double J);

/// Original (pre-RWA) Hamiltonians in uniform-parameter form, for kinds Org,
/// Org_XY and Org_ZZ. Org_ZZ uses phi_k(t) = delta t + phi_k - phi_{k+1}.
PauliSum build_org(HamiltonianKind kind, const DeviceParams& p, double t);
PauliSum build_org(HamiltonianKind kind, const UniformDrive& u, double t,
                   const std::vector<double>& phases = {});

/// Difference between the original Hamiltonian and its effective target,
/// for kinds DeltaH, Delta_XY and Delta_ZZ. The subtracted targets are
/// Control and H_XY_1D with J = -g Omega / 4 delta and H_ZZ with
/// J = +g Omega / 4 delta.
PauliSum build_delta(HamiltonianKind kind, const DeviceParams& p, double t);
PauliSum build_delta(HamiltonianKind kind, const UniformDrive& u, double t,
                     const std::vector<double>& phases = {});

/// The effective Hamiltonian paired with build_org/build_delta.
PauliSum effective_partner(HamiltonianKind kind, const UniformDrive& u);

TimeDependentHamiltonian org_hamiltonian(HamiltonianKind kind,
                                         const UniformDrive& u,
                                         const std::vector<double>& phases = {});

/// Kind-dispatching entry point used by the command line.
struct BuildRequest {
  HamiltonianKind kind = HamiltonianKind::Control;
  Lattice lattice;
  double J = 1.0;
  double t = 0.0;
  DeviceParams device;
  DriveMode drive = DriveMode::All;
  /// Quad-frame kinds are built from `device` when set, from J otherwise.
  bool from_device = false;
};
PauliSum build(const BuildRequest& r);

/// Digital 2D XY pieces (all xx edges, all yy edges) with coupling J.
std::pair<PauliSum, PauliSum> build_xy2d_digital(const Lattice& lat, double J);

/// Splits a sum of two-body xx / yy strings into its xx and yy parts.
std::pair<PauliSum, PauliSum> split_xx_yy(const PauliSum& h);

/// Restricts `h` to the terms whose support lies inside `qubits`.
PauliSum restrict_support(const PauliSum& h, const std::vector<int>& qubits);

/// Relabels every 2D site (i, j) to (i + di, j + dj) on a periodic lattice.
PauliSum translate(const PauliSum& h, const Lattice& lat, int di, int dj);

}  // namespace crda
