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

#include <string>
#include <string_view>
#include <vector>

namespace crda {

enum class Boundary { Open, Periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(std::string_view s);

/**
 * 1D chain or 2D square lattice. Sites are addressed 1-based in the physics
 * convention; a 2D site (i, j) with 1 <= i <= nx, 1 <= j <= ny is stored at
 * qubit index (j - 1) * nx + (i - 1).
 */
struct Lattice {
  int dim = 1;
  int nx = 2;
  int ny = 1;
  Boundary boundary = Boundary::Open;

  static Lattice chain(int n, Boundary b = Boundary::Open);
  static Lattice square(int nx, int ny, Boundary b = Boundary::Periodic);

  int size() const { return nx * ny; }
  /// Qubit index of 1-based 2D site (i, j); wraps when periodic and returns
  /// -1 when the site lies outside an open lattice.
  int site(int i, int j) const;
  /// Qubit index of 1-based chain site k, with the same wrap/-1 semantics.
  int site(int k) const;
  /// Even sublattice in the 1-based sense: chain sites 2, 4, ... and 2D
  /// sites with i + j even.
  bool is_even(int qubit) const;
  std::vector<int> sublattice(bool even) const;

  /// Throws DomainError when extents are non-positive, a periodic chain is
  /// shorter than 3, or a periodic 2D lattice has an odd extent.
  void validate() const;
};

/// Which qubits act as cross-resonance controls.
enum class DriveMode { All, OddOnly, EvenOnly };

std::string to_string(DriveMode m);
DriveMode drive_mode_from_string(std::string_view s);

struct DriveConfig {
  DriveMode driven = DriveMode::All;

  /// Whether 1-based chain site k is a control under this configuration.
  /// For DriveMode::All the last site of an open chain is never driven.
  bool is_control(int k, int n, Boundary b) const;
};

/**
 * Per-qubit device parameters, angular frequencies with hbar = 1. Vectors are
 * indexed by qubit (0-based); g[k] couples qubits k and k + 1 (and g[n - 1]
 * closes the ring when periodic).
 */
struct DeviceParams {
  int n = 2;
  Boundary boundary = Boundary::Open;
  std::vector<double> omega_q;
  std::vector<double> omega;
  std::vector<double> Omega;
  std::vector<double> phi;
  std::vector<double> g;

  int nbonds() const;
  /// Qubit coupled to `k` by bond k (wraps for periodic chains).
  int bond_target(int k) const { return (k + 1) % n; }

  double delta(int k) const { return omega_q.at(static_cast<std::size_t>(k)) -
                                     omega.at(static_cast<std::size_t>(k)); }
  /// Mixing angle of the static frame rotation, atan2(delta, Omega).
  double xi(int k) const;
  /// Generalized Rabi frequency sqrt(delta^2 + Omega^2).
  double eta(int k) const;
  bool is_driven(int k) const { return Omega.at(static_cast<std::size_t>(k)) != 0.0; }

  /// Checks vector sizes and finiteness; throws DomainError.
  void validate() const;

  /**
   * Cross-resonance chain with uniform detuning: qubit frequencies step down
   * by `delta` along the chain, every control k is driven at the frequency
   * of qubit k + 1 with amplitude `Omega` and phase `phi`, and targets are
   * left undriven (Omega = 0, delta = 0, phi = 0).
   */
  static DeviceParams cr_chain(int n, double base_frequency, double delta,
                               double Omega, double g, double phi = 0.0,
                               DriveMode mode = DriveMode::All,
                               Boundary boundary = Boundary::Open);
};

/// Digital-analog block parameters: coupling J, analog time tau per segment
/// and M block repetitions, for a total time T = M * tau.
struct ModelParams {
  double J = 1.0;
  double tau = 0.1;
  int M = 1;

  double total_time() const { return M * tau; }
  void validate() const;
};

/// J_k = -g_k Omega_k / (4 delta_k) for bond k; zero when the control is not
/// driven. Throws DomainError for a driven control with zero detuning.
double effective_coupling(const DeviceParams& p, int k);

struct RegimeThresholds {
  double omega_ratio = 0.1;
  double coupling_ratio = 0.1;
};

struct RegimeEntry {
  int qubit = 0;
  double omega_ratio = 0.0;     // |Omega_k / delta_k|
  double coupling_ratio = 0.0;  // |g_k / delta_k|
  bool ok = true;
};

struct RegimeReport {
  std::vector<RegimeEntry> entries;
  std::vector<std::string> warnings;
  bool ok() const { return warnings.empty(); }
};

/// Weak-driving and dispersive-coupling ratios for every driven qubit.
/// Throws DomainError when a driven qubit has zero detuning.
RegimeReport validate_regime(const DeviceParams& p,
                             const RegimeThresholds& thresholds = {});

/// Uniform scalars (g, Omega, delta, phi) shared by every driven control.
struct UniformDrive {
  int n = 2;
  double g = 0.0;
  double Omega = 0.0;
  double delta = 1.0;
  double phi = 0.0;
  double ratio() const { return Omega / delta; }
  double coupling() const { return -g * Omega / (4.0 * delta); }
};

/// Extracts the uniform scalars, throwing DomainError if the driven controls
/// disagree by more than a relative 1e-12.
UniformDrive uniform_drive(const DeviceParams& p);

}  // namespace crda
