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

#include "crda/error_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>

#include "crda/config.hpp"
#include "crda/errors.hpp"
#include "crda/hamiltonians.hpp"

namespace crda {

namespace {

constexpr double kPassSlack = 1e-9;

const double kSqrt2 = std::numbers::sqrt2;

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 4> kGLNodes{0.1834346424956498, 0.5255324099163290,
                                         0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGLWeights{0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

HamiltonianKind delta_kind(SynthesisModel m) {
  switch (m) {
    case SynthesisModel::Control: return HamiltonianKind::DeltaH;
    case SynthesisModel::XY: return HamiltonianKind::Delta_XY;
    case SynthesisModel::ZZ: return HamiltonianKind::Delta_ZZ;
  }
  throw DomainError("unknown synthesis model");
}

double root_bonds(const UniformDrive& u) {
  return std::sqrt(static_cast<double>(std::max(u.n - 1, 0)));
}

nlohmann::json device_echo(const DeviceParams& p, double t) {
  nlohmann::json j = to_json(p);
  j["t"] = t;
  return j;
}

/// Commutator of two Pauli strings with unit coefficients: 2 a b when they
/// anticommute, empty otherwise.
std::optional<PauliTerm> string_commutator(const PauliTerm& a, const PauliTerm& b) {
  if (a.string.commutes_with(b.string)) return std::nullopt;
  PauliTerm ab = multiply(a, b);
  ab.coeff *= 2.0;
  return ab;
}

bool is_zxy_triple(const PauliString& s) {
  if (s.weight() != 3) return false;
  int counts[4] = {0, 0, 0, 0};
  for (int q = 0; q < s.nqubits(); ++q) ++counts[static_cast<int>(s.at(q))];
  return counts[1] == 1 && counts[2] == 1 && counts[3] == 1;
}

std::string describe_term(const PauliString& s) { return s.label(); }

/// Remaps the support of `h` onto consecutive qubits so that small local
/// operators can be handled densely regardless of the embedding lattice.
PauliSum compress(const PauliSum& h) {
  std::uint64_t support = 0;
  for (const auto& [s, c] : h.terms()) support |= s.xbits() | s.zbits();
  std::vector<int> map(static_cast<std::size_t>(h.nqubits()), -1);
  int m = 0;
  for (int q = 0; q < h.nqubits(); ++q) {
    if ((support >> q) & 1U) map[static_cast<std::size_t>(q)] = m++;
  }
  PauliSum out(std::max(m, 1));
  for (const auto& [s, c] : h.terms()) {
    PauliString t(std::max(m, 1));
    for (int q = 0; q < h.nqubits(); ++q) {
      if (s.at(q) != Pauli::I) t.set(map[static_cast<std::size_t>(q)], s.at(q));
    }
    out.add(t, c);
  }
  return out;
}

/// Terms of a 2D canonical Hamiltonian on the +i / +j bonds leaving the
/// given source sites.
PauliSum bonds_from(const PauliSum& h, const Lattice& lat,
                    const std::vector<std::pair<int, int>>& sources) {
  PauliSum out(h.nqubits());
  for (const auto& [i, j] : sources) {
    const int a = lat.site(i, j);
    for (const int b : {lat.site(i + 1, j), lat.site(i, j + 1)}) {
      if (a < 0 || b < 0) continue;
      const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      for (const auto& [s, c] : h.terms()) {
        if ((s.xbits() | s.zbits()) == mask) out.add(s, c);
      }
    }
  }
  return out;
}

double norm_of(const PauliSum& h, const SpectralNormOptions& opts) {
  if (h.empty()) return 0.0;
  return spectral_norm(h, opts);
}

PauliSum bond_parity_part(const PauliSum& h, bool odd) {
  PauliSum out(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    const std::uint64_t support = s.xbits() | s.zbits();
    int low = 0;
    while (((support >> low) & 1U) == 0) ++low;
    if (((low % 2) == 0) == odd) out.add(s, c);
  }
  return out;
}

/// Maps every string to the lesser of itself and its mirror image about the
/// centre of its support, so that sums differing only in the left/right
/// orientation of individual terms compare equal.
PauliSum orientation_canonical(const PauliSum& h) {
  PauliSum out(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    const std::uint64_t support = s.xbits() | s.zbits();
    int lo = 0, hi = h.nqubits() - 1;
    while (lo < h.nqubits() && ((support >> lo) & 1U) == 0) ++lo;
    while (hi > lo && ((support >> hi) & 1U) == 0) --hi;
    PauliString m(h.nqubits());
    for (int q = lo; q <= hi; ++q) m.set(lo + hi - q, s.at(q));
    out.add(std::min(s, m), c);
  }
  return out;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Formula: return "formula";
    case Provenance::Quoted: return "quoted";
  }
  return "computed";
}

bool ErrorEntry::pass() const {
  if (!std::isfinite(value)) return false;
  if (analytic && tolerance && !(std::abs(value - *analytic) <= *tolerance)) return false;
  if (bound && !(value <= *bound + kPassSlack)) return false;
  if (minimum && !(value >= *minimum - kPassSlack)) return false;
  return true;
}

ErrorEntry& ErrorReport::add(ErrorEntry e) {
  entries.push_back(std::move(e));
  return entries.back();
}

const ErrorEntry& ErrorReport::at(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw DomainError("report has no entry '" + std::string(name) + "'");
}

bool ErrorReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ErrorEntry& e) { return e.pass(); });
}

void ErrorReport::append(const ErrorReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string to_string(SynthesisModel m) {
  switch (m) {
    case SynthesisModel::Control: return "control";
    case SynthesisModel::XY: return "xy";
    case SynthesisModel::ZZ: return "zz";
  }
  return "control";
}

SynthesisModel synthesis_model_from_string(std::string_view s) {
  if (s == "control") return SynthesisModel::Control;
  if (s == "xy") return SynthesisModel::XY;
  if (s == "zz") return SynthesisModel::ZZ;
  throw DomainError("unknown synthesis model '" + std::string(s) +
                    "' (expected control, xy or zz)");
}

double synthesis_norm_numeric(SynthesisModel m, const DeviceParams& p, double t) {
  return frobenius_norm(build_delta(delta_kind(m), p, t), true);
}

double synthesis_norm_analytic(SynthesisModel m, const DeviceParams& p, double t) {
  const UniformDrive u = uniform_drive(p);
  switch (m) {
    case SynthesisModel::Control: return u.g / (2.0 * kSqrt2) * root_bonds(u);
    case SynthesisModel::XY: return u.g / 2.0 * root_bonds(u);
    case SynthesisModel::ZZ: {
      const double dt = u.delta * t;
      const double r = u.ratio();
      double sum = 0.0;
      for (int k = 0; k + 1 < u.n; ++k) {
        const double dphi = p.phi[static_cast<std::size_t>(k)] -
                            p.phi[static_cast<std::size_t>(k + 1)];
        const double phase = dt + dphi;
        const double inner = 2.0 + std::cos(dt) * std::cos(phase - dt) +
                             r * std::sin(dt) * std::sin(phase);
        sum += u.g * u.g / 8.0 * inner;
      }
      return std::sqrt(sum);
    }
  }
  throw DomainError("unknown synthesis model");
}

ErrorReport synthesis_norm(SynthesisModel m, const DeviceParams& p, double t) {
  const UniformDrive u = uniform_drive(p);
  ErrorReport r;
  r.which = "synthesis";
  r.params = device_echo(p, t);
  r.params["model"] = to_string(m);
  ErrorEntry e;
  e.name = "synthesis." + to_string(m);
  e.value = synthesis_norm_numeric(m, p, t);
  e.analytic = synthesis_norm_analytic(m, p, t);
  // The closed forms drop the terms proportional to Omega/delta; each bond
  // contributes at most (g/4)(Omega/delta) in quadrature.
  e.tolerance = std::abs(u.g * u.ratio()) * root_bonds(u) + 1e-12;
  e.units = "normalized Frobenius";
  r.add(e);
  r.add({.name = "omega_over_delta", .value = u.ratio(), .units = "1",
         .provenance = Provenance::Formula});
  return r;
}

double dyson_norm_numeric(const DeviceParams& p, double t) {
  const UniformDrive u = uniform_drive(p);
  // Panels short enough that the fastest (2 delta) oscillation is resolved
  // to machine precision by 8 nodes.
  const double span = std::abs(t);
  const long panels =
      std::max<long>(1, static_cast<long>(std::ceil(2.0 * std::abs(u.delta) * span / 0.5)));
  const double h = t / static_cast<double>(panels);
  PauliSum integral(u.n);
  for (long k = 0; k < panels; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) * h;
    for (std::size_t i = 0; i < kGLNodes.size(); ++i) {
      for (const double sgn : {-1.0, 1.0}) {
        const double s = mid + sgn * kGLNodes[i] * h / 2.0;
        integral += build_delta(HamiltonianKind::DeltaH, p, s) *
                    Complex{kGLWeights[i] * h / 2.0, 0.0};
      }
    }
  }
  // P_org - P_eff = -i * integral; the factor -i does not change the norm.
  return frobenius_norm(integral, true);
}

double dyson_norm_analytic(const DeviceParams& p, double t) {
  const UniformDrive u = uniform_drive(p);
  return u.g / (std::abs(u.delta) * kSqrt2) * std::abs(std::sin(u.delta * t / 2.0)) *
         root_bonds(u);
}

ErrorReport dyson_propagator_diff(const DeviceParams& p, double t) {
  const UniformDrive u = uniform_drive(p);
  ErrorReport r;
  r.which = "dyson";
  r.params = device_echo(p, t);
  ErrorEntry e;
  e.name = "dyson.delta_p";
  e.value = dyson_norm_numeric(p, t);
  e.analytic = dyson_norm_analytic(p, t);
  // Relative 1e-6 plus the integrated Omega/delta row, which stays below
  // g (Omega/delta) / delta per bond in quadrature.
  e.tolerance = 1e-6 * *e.analytic +
                std::abs(u.g * u.ratio() / u.delta) * root_bonds(u) + 1e-12;
  e.units = "normalized Frobenius";
  r.add(e);
  const double dh = synthesis_norm_numeric(SynthesisModel::Control, p, 0.0);
  if (t != 0.0 && dh > 0.0) {
    r.add({.name = "dyson.small_time_ratio",
           .value = e.value / (std::abs(t) * dh),
           .units = "1",
           .provenance = Provenance::Computed});
  }
  return r;
}

ErrorReport table1_check(const Lattice& lat, double J) {
  if (lat.dim != 2 || lat.boundary != Boundary::Periodic || lat.nx < 4 ||
      lat.ny < 4) {
    throw DomainError("table1_check needs a periodic 2D lattice with extents >= 4");
  }
  lat.validate();
  const PauliSum hi = build_canonical(HamiltonianKind::H_I, lat, J);
  const PauliSum hii = build_canonical(HamiltonianKind::H_II, lat, J);
  ErrorReport r;
  r.which = "table1";
  r.params = to_json(lat);
  r.params["J"] = J;

  long nonzero = 0;
  long not_triple = 0;
  double coeff_dev = 0.0;
  const double expected = 2.0 * J * J;
  for (const auto& [a, ca] : hi.terms()) {
    for (const auto& [b, cb] : hii.terms()) {
      const auto c = string_commutator({a, ca}, {b, cb});
      if (!c) continue;
      ++nonzero;
      if (!is_zxy_triple(c->string)) {
        ++not_triple;
        if (not_triple <= 5) {
          r.notes.push_back("non z.x.y commutator from " + describe_term(a) +
                            " and " + describe_term(b));
        }
      }
      const double dev = std::abs(std::abs(c->coeff) - expected);
      if (dev > 1e-12 && coeff_dev <= 1e-12) {
        r.notes.push_back("coefficient magnitude mismatch from " + describe_term(a) +
                          " and " + describe_term(b));
      }
      coeff_dev = std::max(coeff_dev, dev);
    }
  }
  const int cells = lat.nx * lat.ny / 4;
  r.add({.name = "table1.nonzero_pairs", .value = static_cast<double>(nonzero),
         .analytic = 16.0 * cells, .tolerance = 0.0, .units = "count"});
  r.add({.name = "table1.nonzero_per_cell",
         .value = static_cast<double>(nonzero) / cells,
         .analytic = 16.0, .tolerance = 0.0, .units = "count"});
  r.add({.name = "table1.non_zxy_strings", .value = static_cast<double>(not_triple),
         .bound = 0.0, .units = "count"});
  r.add({.name = "table1.coefficient_deviation", .value = coeff_dev,
         .bound = 1e-12, .units = "J^2"});

  const auto [ixx, iyy] = split_xx_yy(hi);
  const auto [iixx, iiyy] = split_xx_yy(hii);
  const PauliSum xx_xx = commutator(ixx, iixx);
  const PauliSum yy_yy = commutator(iyy, iiyy);
  r.add({.name = "table1.xx_xx_terms", .value = static_cast<double>(xx_xx.size()),
         .bound = 0.0, .units = "count"});
  r.add({.name = "table1.yy_yy_terms", .value = static_cast<double>(yy_yy.size()),
         .bound = 0.0, .units = "count"});

  const PauliSum full = commutator(hi, hii);
  const PauliSum a = commutator(iyy, iixx);
  const PauliSum b = commutator(ixx, iiyy);
  const PauliSum diff = full - (a + b);
  r.add({.name = "table1.a_plus_b_residual", .value = diff.max_abs_coeff(),
         .bound = 0.0, .units = "J^2"});
  r.add({.name = "table1.a_terms", .value = static_cast<double>(a.size()),
         .units = "count"});
  r.add({.name = "table1.b_terms", .value = static_cast<double>(b.size()),
         .units = "count"});

  long full_bad = 0;
  double full_dev = 0.0;
  for (const auto& [s, c] : full.terms()) {
    if (!is_zxy_triple(s)) ++full_bad;
    full_dev = std::max(full_dev, std::abs(std::abs(c) - expected));
  }
  r.add({.name = "table1.commutator_terms", .value = static_cast<double>(full.size()),
         .units = "count"});
  r.add({.name = "table1.commutator_non_zxy", .value = static_cast<double>(full_bad),
         .bound = 0.0, .units = "count"});
  r.add({.name = "table1.commutator_coefficient_deviation", .value = full_dev,
         .bound = 1e-12, .units = "J^2"});
  return r;
}

std::string to_string(TrotterModel m) {
  switch (m) {
    case TrotterModel::XY2D_DA: return "xy2d_da";
    case TrotterModel::XY2D_Digital: return "xy2d_digital";
    case TrotterModel::Heis_DA: return "heis_da";
    case TrotterModel::Heis_Digital: return "heis_digital";
  }
  return "xy2d_da";
}

TrotterModel trotter_model_from_string(std::string_view s) {
  for (const auto m : {TrotterModel::XY2D_DA, TrotterModel::XY2D_Digital,
                       TrotterModel::Heis_DA, TrotterModel::Heis_Digital}) {
    if (s == to_string(m)) return m;
  }
  throw DomainError("unknown trotter model '" + std::string(s) +
                    "' (expected xy2d_da, xy2d_digital, heis_da or heis_digital)");
}

PauliSum trotter_commutator_sum(TrotterModel m, const Lattice& lat, double J) {
  lat.validate();
  const bool two_d = m == TrotterModel::XY2D_DA || m == TrotterModel::XY2D_Digital;
  if (two_d != (lat.dim == 2)) {
    throw DomainError("trotter model '" + to_string(m) + "' needs a " +
                      (two_d ? "2D lattice" : "1D chain"));
  }
  switch (m) {
    case TrotterModel::XY2D_DA:
      return commutator(build_canonical(HamiltonianKind::H_I, lat, J),
                        build_canonical(HamiltonianKind::H_II, lat, J));
    case TrotterModel::XY2D_Digital: {
      const auto [xx, yy] = split_xx_yy(build_canonical(HamiltonianKind::H_XY_2D, lat, J));
      return commutator(xx, yy);
    }
    case TrotterModel::Heis_DA: {
      const PauliSum e = build_canonical(HamiltonianKind::H_E, lat, J);
      const PauliSum e1 = build_canonical(HamiltonianKind::H_E_Prime, lat, J);
      const PauliSum e2 = build_canonical(HamiltonianKind::H_E_DoublePrime, lat, J);
      return commutator(e, e1) + commutator(e, e2) + commutator(e1, e2);
    }
    case TrotterModel::Heis_Digital: {
      if (lat.boundary != Boundary::Open) {
        throw DomainError("the digital Heisenberg split is defined on open chains");
      }
      const PauliSum h = build_canonical(HamiltonianKind::H_Heis, lat, J);
      return commutator(bond_parity_part(h, false), bond_parity_part(h, true));
    }
  }
  throw DomainError("unknown trotter model");
}

PauliSum heisenberg_printed_sum(int n, double J) {
  PauliSum s(n);
  using P = Pauli;
  auto triple = [n](int k, P a, P b, P c) {
    PauliString t(n);
    t.set(k - 1, a);
    t.set(k, b);
    t.set(k + 1, c);
    return t;
  };
  const Complex f{0.0, 2.0 * J * J};
  // 1-based k from 2 to N - 1 is 0-based centre 1 .. n - 2.
  for (int k = 1; k + 1 < n; ++k) {
    s.add(triple(k, P::X, P::Z, P::Y), f);
    s.add(triple(k, P::Z, P::X, P::Y), -f);
    s.add(triple(k, P::Z, P::Y, P::X), f);
  }
  return s;
}

PauliSum heisenberg_bond_pair_commutator(double J) {
  const Lattice chain = Lattice::chain(3);
  const PauliSum h = build_canonical(HamiltonianKind::H_Heis, chain, J);
  return commutator(bond_parity_part(h, true), bond_parity_part(h, false));
}

double trotter_bound(TrotterModel m, int N, double J) {
  const double n = static_cast<double>(N);
  switch (m) {
    case TrotterModel::XY2D_DA: return 8.0 * n * n * J * J;
    case TrotterModel::XY2D_Digital: return 24.0 * n * n * J * J;
    case TrotterModel::Heis_DA: return 6.0 * J * J * n;
    case TrotterModel::Heis_Digital: return 12.0 * J * J * n;
  }
  return 0.0;
}

ErrorReport trotter_commutator(TrotterModel m, const Lattice& lat, double J,
                               const SpectralNormOptions& opts) {
  ErrorReport r;
  r.which = "trotter";
  r.params = to_json(lat);
  r.params["J"] = J;
  r.params["model"] = to_string(m);
  const PauliSum c = trotter_commutator_sum(m, lat, J);
  const int N = lat.dim == 2 ? lat.nx : lat.size();
  if (lat.dim == 2 && lat.nx != lat.ny) {
    r.notes.push_back("non-square lattice: bound evaluated with N = nx");
  }
  const std::string base = to_string(m);
  r.add({.name = base + ".commutator_norm", .value = norm_of(c, opts),
         .bound = trotter_bound(m, N, J), .units = "J^2"});
  r.add({.name = base + ".commutator_terms", .value = static_cast<double>(c.size()),
         .units = "count"});
  if (m == TrotterModel::Heis_DA && lat.boundary == Boundary::Open) {
    const PauliSum printed = heisenberg_printed_sum(lat.size(), J);
    // The printed sum fixes one left/right orientation for every centre k;
    // the built operators alternate it with the bond parity, so the literal
    // residual is informational and the structural check ignores orientation.
    r.add({.name = base + ".printed_form_residual",
           .value = (c - printed).max_abs_coeff(), .units = "J^2"});
    r.add({.name = base + ".printed_form_residual_unoriented",
           .value = (orientation_canonical(c) - orientation_canonical(printed))
                        .max_abs_coeff(),
           .bound = 0.0, .units = "J^2"});
  }
  if (m == TrotterModel::Heis_Digital) {
    const PauliSum pair = heisenberg_bond_pair_commutator(J);
    r.add({.name = base + ".bond_pair_norm", .value = norm_of(pair, opts),
           .analytic = 4.0 * std::sqrt(3.0) * J * J, .tolerance = 1e-6,
           .bound = 12.0 * J * J, .units = "J^2"});
  }
  return r;
}

ErrorReport trotter_comparison(bool two_dimensional, const Lattice& lat, double J,
                               const SpectralNormOptions& opts) {
  const TrotterModel da = two_dimensional ? TrotterModel::XY2D_DA : TrotterModel::Heis_DA;
  const TrotterModel dig =
      two_dimensional ? TrotterModel::XY2D_Digital : TrotterModel::Heis_Digital;
  ErrorReport r = trotter_commutator(da, lat, J, opts);
  r.append(trotter_commutator(dig, lat, J, opts));
  r.params["model"] = two_dimensional ? "xy2d" : "heisenberg";
  const double nd = r.at(to_string(da) + ".commutator_norm").value;
  const double ng = r.at(to_string(dig) + ".commutator_norm").value;
  ErrorEntry ratio{.name = std::string(two_dimensional ? "xy2d" : "heis") +
                           ".digital_over_da",
                   .value = nd > 0.0 ? ng / nd : std::numeric_limits<double>::infinity(),
                   .units = "1"};
  // The DA split must not do worse than the digital one; in 2D the margin
  // is at least 1.5.
  ratio.minimum = two_dimensional ? 1.5 : 1.0;
  r.add(ratio);
  return r;
}

ErrorReport unit_cell_report(double J, const SpectralNormOptions& opts) {
  ErrorReport r;
  r.which = "unitcell";
  r.params = {{"J", J}};

  // DA cell: the eight +i / +j bonds leaving a 2x2 plaquette, for both
  // plaquette parities, embedded in an open lattice large enough to hold
  // every bond.
  auto da_cell = [&](int oi, int oj) {
    const Lattice lat = Lattice::square(oi + 2, oj + 2, Boundary::Open);
    const std::vector<std::pair<int, int>> src{
        {oi, oj}, {oi + 1, oj}, {oi, oj + 1}, {oi + 1, oj + 1}};
    const PauliSum hi = bonds_from(build_canonical(HamiltonianKind::H_I, lat, J), lat, src);
    const PauliSum hii =
        bonds_from(build_canonical(HamiltonianKind::H_II, lat, J), lat, src);
    return norm_of(compress(commutator(hi, hii)), opts);
  };
  const double da_even = da_cell(1, 1);
  const double da_odd = da_cell(2, 1);
  r.add({.name = "unitcell.da_even_origin", .value = da_even, .units = "J^2"});
  r.add({.name = "unitcell.da_odd_origin", .value = da_odd, .units = "J^2"});

  // Digital cells: one horizontal and one vertical bond sharing a site
  // (L shape), and the four bonds of a plaquette.
  auto digital = [&](const std::vector<std::pair<int, int>>& src,
                     const std::vector<std::pair<int, int>>& dir) {
    const Lattice lat = Lattice::square(3, 3, Boundary::Open);
    PauliSum xx(lat.size()), yy(lat.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      const int a = lat.site(src[k].first, src[k].second);
      const int b = lat.site(src[k].first + dir[k].first, src[k].second + dir[k].second);
      xx.add(PauliString::pair(lat.size(), a, Pauli::X, b, Pauli::X), J);
      yy.add(PauliString::pair(lat.size(), a, Pauli::Y, b, Pauli::Y), J);
    }
    return norm_of(compress(commutator(xx, yy)), opts);
  };
  const double dig_l = digital({{1, 1}, {1, 1}}, {{1, 0}, {0, 1}});
  const double dig_plaquette =
      digital({{1, 1}, {1, 1}, {2, 1}, {1, 2}}, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  r.add({.name = "unitcell.digital_l_shape", .value = dig_l, .analytic = 4.0 * J * J,
         .tolerance = 1e-9, .units = "J^2"});
  r.add({.name = "unitcell.digital_plaquette", .value = dig_plaquette, .units = "J^2"});

  const double da_best = std::max(da_even, da_odd);
  r.add({.name = "unitcell.tiled_ratio", .value = 4.0 * dig_l / da_best, .units = "1"});

  r.add({.name = "unitcell.quoted_da", .value = 15.44, .units = "J^2",
         .provenance = Provenance::Quoted});
  r.add({.name = "unitcell.quoted_digital", .value = 8.49, .units = "J^2",
         .provenance = Provenance::Quoted});
  r.add({.name = "unitcell.quoted_ratio", .value = 2.19, .units = "1",
         .provenance = Provenance::Quoted});
  r.notes.push_back(
      "the operator content of the quoted unit cells is not specified; candidate "
      "cells are reported without asserting the quoted values");
  return r;
}

ErrorReport bound_table(std::string_view model, int N, double J, double g) {
  if (N < 1) throw DomainError("bound_table needs N >= 1");
  ErrorReport r;
  r.which = "bounds";
  r.params = {{"model", std::string(model)}, {"N", N}, {"J", J}, {"g", g}};
  const bool all = model == "all";
  bool any = false;
  for (const auto m : {TrotterModel::XY2D_DA, TrotterModel::XY2D_Digital,
                       TrotterModel::Heis_DA, TrotterModel::Heis_Digital}) {
    if (all || model == to_string(m)) {
      r.add({.name = "bound." + to_string(m), .value = trotter_bound(m, N, J),
             .units = "J^2", .provenance = Provenance::Formula});
      any = true;
    }
  }
  const double root = std::sqrt(static_cast<double>(N - 1));
  if (all || model == "heis_digital") {
    r.add({.name = "bound.heis_digital_pair", .value = 12.0 * J * J, .units = "J^2",
           .provenance = Provenance::Formula});
  }
  if (all || model == "control") {
    r.add({.name = "bound.synthesis_control", .value = g / (2.0 * kSqrt2) * root,
           .units = "normalized Frobenius", .provenance = Provenance::Formula});
    any = true;
  }
  if (all || model == "xy") {
    r.add({.name = "bound.synthesis_xy", .value = g / 2.0 * root,
           .units = "normalized Frobenius", .provenance = Provenance::Formula});
    any = true;
  }
  if (!any) {
    throw DomainError("unknown bound model '" + std::string(model) + "'");
  }
  return r;
}

nlohmann::json to_json(const ErrorEntry& e) {
  nlohmann::json j{{"name", e.name},
                   {"value", e.value},
                   {"units", e.units},
                   {"provenance", to_string(e.provenance)},
                   {"pass", e.pass()}};
  j["analytic"] = e.analytic ? nlohmann::json(*e.analytic) : nlohmann::json(nullptr);
  j["tolerance"] = e.tolerance ? nlohmann::json(*e.tolerance) : nlohmann::json(nullptr);
  j["bound"] = e.bound ? nlohmann::json(*e.bound) : nlohmann::json(nullptr);
  j["minimum"] = e.minimum ? nlohmann::json(*e.minimum) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ErrorReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"which", r.which},
          {"params", r.params},
          {"entries", entries},
          {"notes", r.notes},
          {"pass", r.pass()}};
}

}  // namespace crda
