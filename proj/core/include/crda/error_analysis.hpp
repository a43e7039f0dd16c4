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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "crda/device.hpp"
#include "crda/linalg.hpp"
#include "crda/pauli.hpp"

namespace crda {

/// Where a reported number comes from.
enum class Provenance {
  Computed,  // numerical evaluation of built operators
  Formula,   // closed-form expression evaluated at the given parameters
  Quoted,    // literature value carried for comparison only
};

std::string to_string(Provenance p);

/**
 * One named scalar of an error report. `analytic` with `tolerance` asks for
 * |value - analytic| <= tolerance; `bound` asks for value <= bound + 1e-9;
 * `minimum` asks for value >= minimum - 1e-9. Entries without any of these
 * are informational and always pass as long as they are finite.
 */
struct ErrorEntry {
  std::string name;
  double value = 0.0;
  std::optional<double> analytic;
  std::optional<double> tolerance;
  std::optional<double> bound;
  std::optional<double> minimum;
  std::string units;
  Provenance provenance = Provenance::Computed;

  bool pass() const;
};

struct ErrorReport {
  std::string which;
  nlohmann::json params = nlohmann::json::object();
  std::vector<ErrorEntry> entries;
  std::vector<std::string> notes;

  ErrorEntry& add(ErrorEntry e);
  const ErrorEntry& at(std::string_view name) const;
  bool pass() const;
  void append(const ErrorReport& other);
};

enum class SynthesisModel { Control, XY, ZZ };
std::string to_string(SynthesisModel m);
SynthesisModel synthesis_model_from_string(std::string_view s);

/// Normalized Frobenius norm of the synthesis error at time t, summed in
/// quadrature over bonds, for each closed form.
double synthesis_norm_numeric(SynthesisModel m, const DeviceParams& p, double t);
double synthesis_norm_analytic(SynthesisModel m, const DeviceParams& p, double t);

ErrorReport synthesis_norm(SynthesisModel m, const DeviceParams& p, double t);

/// Normalized Frobenius norm of the difference of first-order Dyson
/// propagators of the original and effective Hamiltonians, integrated with
/// composite Gauss-Legendre quadrature.
double dyson_norm_numeric(const DeviceParams& p, double t);
double dyson_norm_analytic(const DeviceParams& p, double t);

ErrorReport dyson_propagator_diff(const DeviceParams& p, double t);

/// Structure of the commutators between the two toggled 2D Hamiltonians.
ErrorReport table1_check(const Lattice& lat, double J = 1.0);

enum class TrotterModel { XY2D_DA, XY2D_Digital, Heis_DA, Heis_Digital };
std::string to_string(TrotterModel m);
TrotterModel trotter_model_from_string(std::string_view s);

/// Sum of first-order Trotter commutators of the model's split:
///  XY2D_DA      [H_I, H_II]
///  XY2D_Digital [H_xx, H_yy]
///  Heis_DA      [H_E, H_E'] + [H_E, H_E''] + [H_E', H_E'']
///  Heis_Digital [H_even bonds, H_odd bonds]
PauliSum trotter_commutator_sum(TrotterModel m, const Lattice& lat, double J);

/// The commutator sum of the three-segment Heisenberg block written out as
/// 2 i J^2 sum_k (x z y - z x y + z y x) over 2 <= k <= N - 1.
PauliSum heisenberg_printed_sum(int n, double J);

/// [S_1.S_2, S_2.S_3] on three qubits scaled by J^2.
PauliSum heisenberg_bond_pair_commutator(double J);

/// Analytic bound on the spectral norm of the commutator sum; N is the
/// linear size (2D) or the chain length (1D).
double trotter_bound(TrotterModel m, int N, double J);

ErrorReport trotter_commutator(TrotterModel m, const Lattice& lat, double J,
                               const SpectralNormOptions& opts = {});

/// Both split norms and their ratio for one family (DA vs digital).
ErrorReport trotter_comparison(bool two_dimensional, const Lattice& lat,
                               double J, const SpectralNormOptions& opts = {});

/// Candidate unit-cell commutator norms, compared with the quoted values
/// without asserting them.
ErrorReport unit_cell_report(double J = 1.0,
                             const SpectralNormOptions& opts = {});

/// Pure closed-form bounds for one model name ("xy2d_da", "xy2d_digital",
/// "heis_da", "heis_digital", "control", "xy", or "all").
ErrorReport bound_table(std::string_view model, int N, double J = 1.0,
                        double g = 1.0);

nlohmann::json to_json(const ErrorEntry& e);
nlohmann::json to_json(const ErrorReport& r);

}  // namespace crda
