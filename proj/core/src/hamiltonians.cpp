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

#include "crda/hamiltonians.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "crda/errors.hpp"

namespace crda {
namespace {

using P = Pauli;

struct KindName {
  HamiltonianKind kind;
  const char* name;
};

constexpr std::array<KindName, 29> kKindNames{{
    {HamiltonianKind::LabFrame2Q, "lab_frame_2q"},
    {HamiltonianKind::LabFrameNQ, "lab_frame_nq"},
    {HamiltonianKind::QF_Effective, "qf_effective"},
    {HamiltonianKind::QF_EffectiveOdd, "qf_effective_odd"},
    {HamiltonianKind::QF_EffectiveEven, "qf_effective_even"},
    {HamiltonianKind::Control, "control"},
    {HamiltonianKind::Org, "org"},
    {HamiltonianKind::DeltaH, "delta_h"},
    {HamiltonianKind::H_Even, "h_even"},
    {HamiltonianKind::H_Odd, "h_odd"},
    {HamiltonianKind::H_EvenPrime, "h_even_prime"},
    {HamiltonianKind::H_OddPrime, "h_odd_prime"},
    {HamiltonianKind::H1, "h1"},
    {HamiltonianKind::H2, "h2"},
    {HamiltonianKind::H_ZZ, "h_zz"},
    {HamiltonianKind::H_XY_1D, "h_xy_1d"},
    {HamiltonianKind::H_2D_Odd, "h_2d_odd"},
    {HamiltonianKind::H_2D_Even, "h_2d_even"},
    {HamiltonianKind::H_I, "h_i"},
    {HamiltonianKind::H_II, "h_ii"},
    {HamiltonianKind::H_XY_2D, "h_xy_2d"},
    {HamiltonianKind::H_E, "h_e"},
    {HamiltonianKind::H_E_Prime, "h_e_prime"},
    {HamiltonianKind::H_E_DoublePrime, "h_e_double_prime"},
    {HamiltonianKind::H_Heis, "h_heis"},
    {HamiltonianKind::Org_XY, "org_xy"},
    {HamiltonianKind::Delta_XY, "delta_xy"},
    {HamiltonianKind::Org_ZZ, "org_zz"},
    {HamiltonianKind::Delta_ZZ, "delta_zz"},
}};

/// Letters placed on a bond; Pauli::I in `first` means "no term".
struct BondPattern {
  std::vector<std::pair<P, P>> odd;   // bonds starting at odd site k
  std::vector<std::pair<P, P>> even;  // bonds starting at even site k
};

BondPattern pattern_1d(HamiltonianKind kind) {
  using PP = std::pair<P, P>;
  const PP xx{P::X, P::X}, yy{P::Y, P::Y}, zz{P::Z, P::Z}, xz{P::X, P::Z};
  switch (kind) {
    case HamiltonianKind::QF_Effective:
    case HamiltonianKind::Control: return {{xz}, {xz}};
    case HamiltonianKind::QF_EffectiveOdd: return {{xx}, {}};
    case HamiltonianKind::QF_EffectiveEven: return {{}, {xx}};
    case HamiltonianKind::H_E:
    case HamiltonianKind::H_Even: return {{xx}, {zz}};
    case HamiltonianKind::H_Odd: return {{zz}, {xx}};
    case HamiltonianKind::H_EvenPrime: return {{xx}, {yy}};
    case HamiltonianKind::H_E_DoublePrime:
    case HamiltonianKind::H_OddPrime: return {{yy}, {xx}};
    case HamiltonianKind::H1: return {{zz}, {}};
    case HamiltonianKind::H2: return {{}, {zz}};
    case HamiltonianKind::H_ZZ: return {{zz}, {zz}};
    case HamiltonianKind::H_XY_1D: return {{xx, yy}, {xx, yy}};
    case HamiltonianKind::H_E_Prime: return {{zz}, {yy}};
    case HamiltonianKind::H_Heis: return {{xx, yy, zz}, {xx, yy, zz}};
    default: break;
  }
  throw DomainError("kind '" + to_string(kind) + "' is not a 1D static family");
}

bool alternating(const BondPattern& b) { return b.odd != b.even; }

PauliSum canonical_1d(HamiltonianKind kind, const Lattice& lat, double J) {
  const int n = lat.size();
  const BondPattern pat = pattern_1d(kind);
  if (lat.boundary == Boundary::Periodic && alternating(pat) && n % 2 != 0) {
    throw DomainError("alternating family '" + to_string(kind) +
                      "' needs an even periodic chain");
  }
  PauliSum h(n);
  const int nb = lat.boundary == Boundary::Periodic ? n : n - 1;
  for (int k = 1; k <= nb; ++k) {
    const int a = lat.site(k);
    const int b = lat.site(k + 1);
    for (const auto& [pa, pb] : (k % 2 == 1) ? pat.odd : pat.even) {
      h.add(PauliString::pair(n, a, pa, b, pb), J);
    }
  }
  return h;
}

/// Letters for the bonds leaving a 2D site, by the parity of i + j.
struct SitePattern {
  std::vector<std::pair<P, P>> even;
  std::vector<std::pair<P, P>> odd;
};

SitePattern pattern_2d(HamiltonianKind kind) {
  using PP = std::pair<P, P>;
  const PP xx{P::X, P::X}, yy{P::Y, P::Y}, zz{P::Z, P::Z}, xz{P::X, P::Z};
  switch (kind) {
    case HamiltonianKind::QF_Effective:
    case HamiltonianKind::Control: return {{xz}, {xz}};
    case HamiltonianKind::H_2D_Odd: return {{zz}, {xx}};
    case HamiltonianKind::H_2D_Even: return {{xx}, {zz}};
    case HamiltonianKind::H_I: return {{xx}, {yy}};
    case HamiltonianKind::H_II: return {{yy}, {xx}};
    case HamiltonianKind::H_XY_2D: return {{xx, yy}, {xx, yy}};
    default: break;
  }
  throw DomainError("kind '" + to_string(kind) + "' is not a 2D static family");
}

PauliSum canonical_2d(HamiltonianKind kind, const Lattice& lat, double J) {
  const SitePattern pat = pattern_2d(kind);
  const int n = lat.size();
  PauliSum h(n);
  for (int j = 1; j <= lat.ny; ++j) {
    for (int i = 1; i <= lat.nx; ++i) {
      const int c = lat.site(i, j);
      const auto& letters = ((i + j) % 2 == 0) ? pat.even : pat.odd;
      for (const int nb : {lat.site(i + 1, j), lat.site(i, j + 1)}) {
        if (nb < 0) continue;
        for (const auto& [pa, pb] : letters) {
          h.add(PauliString::pair(n, c, pa, nb, pb), J);
        }
      }
    }
  }
  return h;
}

void add2(PauliSum& h, int a, P pa, int b, P pb, double c) {
  if (c != 0.0) h.add(PauliString::pair(h.nqubits(), a, pa, b, pb), c);
}

std::vector<double> bond_phase_differences(const UniformDrive& u,
                                           const std::vector<double>& phases) {
  std::vector<double> d(static_cast<std::size_t>(std::max(u.n - 1, 0)), 0.0);
  if (phases.empty()) return d;
  if (static_cast<int>(phases.size()) != u.n) {
    throw DomainError("phase vector size does not match qubit count");
  }
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = phases[k] - phases[k + 1];
  return d;
}

}  // namespace

std::string to_string(HamiltonianKind k) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == k) return kn.name;
  }
  return "unknown";
}

HamiltonianKind hamiltonian_kind_from_string(std::string_view s) {
  for (const auto& kn : kKindNames) {
    if (s == kn.name) return kn.kind;
  }
  throw DomainError("unknown Hamiltonian kind '" + std::string(s) + "'");
}

std::vector<HamiltonianKind> all_hamiltonian_kinds() {
  std::vector<HamiltonianKind> out;
  for (const auto& kn : kKindNames) out.push_back(kn.kind);
  return out;
}

bool is_time_dependent(HamiltonianKind k) {
  switch (k) {
    case HamiltonianKind::LabFrame2Q:
    case HamiltonianKind::LabFrameNQ:
    case HamiltonianKind::Org:
    case HamiltonianKind::DeltaH:
    case HamiltonianKind::Org_XY:
    case HamiltonianKind::Delta_XY:
    case HamiltonianKind::Org_ZZ:
    case HamiltonianKind::Delta_ZZ: return true;
    default: return false;
  }
}

bool is_two_dimensional(HamiltonianKind k) {
  switch (k) {
    case HamiltonianKind::H_2D_Odd:
    case HamiltonianKind::H_2D_Even:
    case HamiltonianKind::H_I:
    case HamiltonianKind::H_II:
    case HamiltonianKind::H_XY_2D: return true;
    default: return false;
  }
}

double TimeDependentHamiltonian::max_frequency() const {
  double m = 0.0;
  for (double f : frequencies) m = std::max(m, std::abs(f));
  return m;
}

PauliSum build_lab_frame(const DeviceParams& p, double t) {
  p.validate();
  PauliSum h(p.n);
  for (int k = 0; k < p.n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    h.add(PauliString::single(p.n, k, P::Z), 0.5 * p.omega_q[kk]);
    h.add(PauliString::single(p.n, k, P::X),
          p.Omega[kk] * std::cos(p.omega[kk] * t + p.phi[kk]));
  }
  for (int k = 0; k < p.nbonds(); ++k) {
    add2(h, k, P::X, p.bond_target(k), P::X, 0.5 * p.g[static_cast<std::size_t>(k)]);
  }
  return h;
}

TimeDependentHamiltonian lab_frame_hamiltonian(const DeviceParams& p) {
  p.validate();
  TimeDependentHamiltonian td;
  td.nqubits = p.n;
  td.generator = [p](double t) { return build_lab_frame(p, t); };
  for (int k = 0; k < p.n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    td.frequencies.push_back(p.omega_q[kk]);
    if (p.is_driven(k)) td.frequencies.push_back(p.omega[kk]);
  }
  std::sort(td.frequencies.begin(), td.frequencies.end());
  td.diagonal_part = PauliSum(p.n);
  for (int k = 0; k < p.n; ++k) {
    td.diagonal_part.add(PauliString::single(p.n, k, P::Z),
                         0.5 * p.omega_q[static_cast<std::size_t>(k)]);
  }
  return td;
}

PauliSum build_qf_effective(const DeviceParams& p, const DriveConfig& d) {
  p.validate();
  PauliSum h(p.n);
  for (int k = 0; k < p.n; ++k) {
    const bool control = d.is_control(k + 1, p.n, p.boundary);
    const auto kk = static_cast<std::size_t>(k);
    if (!control) {
      if (d.driven != DriveMode::All && p.Omega[kk] != 0.0) {
        throw DomainError("qubit " + std::to_string(k + 1) +
                          " is a target under drive mode '" +
                          to_string(d.driven) + "' but carries a drive");
      }
      continue;
    }
    if (p.Omega[kk] == 0.0) continue;
    const double dk = p.delta(k);
    if (dk == 0.0) {
      throw DomainError("zero detuning on driven qubit " + std::to_string(k + 1));
    }
    const double a = p.g[kk] * p.Omega[kk] / (4.0 * dk);
    const int t = p.bond_target(k);
    if (d.driven == DriveMode::All) {
      const double dphi = p.phi[kk] - p.phi[static_cast<std::size_t>(t)];
      add2(h, k, P::X, t, P::Y, a * std::sin(dphi));
      add2(h, k, P::X, t, P::Z, -a * std::cos(dphi));
    } else {
      add2(h, k, P::X, t, P::X, a * std::cos(p.phi[kk]));
      add2(h, k, P::X, t, P::Y, a * std::sin(p.phi[kk]));
    }
  }
  return h;
}

PauliSum build_qf_effective_mixed(const DeviceParams& p) {
  p.validate();
  PauliSum h(p.n);
  for (int k = 0; k < p.nbonds(); ++k) {
    const auto kk = static_cast<std::size_t>(k);
    if (p.Omega[kk] == 0.0) continue;
    const double dk = p.delta(k);
    if (dk == 0.0) {
      throw DomainError("zero detuning on driven qubit " + std::to_string(k + 1));
    }
    const double a = p.g[kk] * p.Omega[kk] / (4.0 * dk);
    const int t = p.bond_target(k);
    const double dphi = p.phi[kk] - p.phi[static_cast<std::size_t>(t)];
    if (p.is_driven(t)) {
      add2(h, k, P::X, t, P::Y, a * std::sin(dphi));
      add2(h, k, P::X, t, P::Z, -a * std::cos(dphi));
    } else {
      add2(h, k, P::X, t, P::X, a * std::cos(dphi));
      add2(h, k, P::X, t, P::Y, a * std::sin(dphi));
    }
  }
  return h;
}

PauliSum build_canonical(HamiltonianKind kind, const Lattice& lat, double J) {
  lat.validate();
  if (is_time_dependent(kind)) {
    throw DomainError("kind '" + to_string(kind) + "' is time dependent");
  }
  if (lat.dim == 2) {
    return canonical_2d(kind, lat, J);
  }
  if (is_two_dimensional(kind)) {
    throw DomainError("kind '" + to_string(kind) + "' requires a 2D lattice");
  }
  return canonical_1d(kind, lat, J);
}

PauliSum build_org(HamiltonianKind kind, const DeviceParams& p, double t) {
  return build_org(kind, uniform_drive(p), t, p.phi);
}

PauliSum build_org(HamiltonianKind kind, const UniformDrive& u, double t,
                   const std::vector<double>& phases) {
  const int n = u.n;
  const double q = u.g / 4.0;
  const double r = u.ratio();
  const double dt = u.delta * t;
  const double c = std::cos(dt), s = std::sin(dt);
  const double c2 = std::cos(2.0 * dt), s2 = std::sin(2.0 * dt);
  const auto dphi = bond_phase_differences(u, phases);
  PauliSum h(n);
  for (int k = 0; k + 1 < n; ++k) {
    const int a = k, b = k + 1;
    switch (kind) {
      case HamiltonianKind::Org:
        add2(h, a, P::Z, b, P::Z, q * c);
        add2(h, a, P::Y, b, P::Y, q * c);
        add2(h, a, P::Y, b, P::Z, q * s);
        add2(h, a, P::Z, b, P::Y, -q * s);
        add2(h, a, P::X, b, P::Z, -q * r);
        add2(h, a, P::Z, b, P::X, -q * r * c2);
        add2(h, a, P::Y, b, P::X, -q * r * s2);
        break;
      case HamiltonianKind::Org_XY:
        add2(h, a, P::Y, b, P::Y, -q * r);
        add2(h, a, P::X, b, P::X, -q * r);
        add2(h, a, P::X, b, P::Y, q * c);
        add2(h, a, P::Y, b, P::X, q * c);
        add2(h, a, P::Z, b, P::Z, -2.0 * q * c);
        add2(h, a, P::Z, b, P::Y, q * s);
        add2(h, a, P::Z, b, P::X, -q * s);
        add2(h, a, P::X, b, P::Z, q * s);
        add2(h, a, P::Y, b, P::Z, -q * s);
        add2(h, a, P::Z, b, P::Y, q * r * s2);
        add2(h, a, P::Z, b, P::X, -q * r * s2);
        add2(h, a, P::Y, b, P::Y, -q * r * c2);
        add2(h, a, P::X, b, P::X, -q * r * c2);
        break;
      case HamiltonianKind::Org_ZZ: {
        const double ph = dt + dphi[static_cast<std::size_t>(k)];
        const double cp = std::cos(ph), sp = std::sin(ph);
        // [z r - x cos + y sin] z + (y cos + x sin) y
        add2(h, a, P::Z, b, P::Z, q * r);
        add2(h, a, P::X, b, P::Z, -q * c);
        add2(h, a, P::Y, b, P::Z, q * s);
        add2(h, a, P::Y, b, P::Y, q * c);
        add2(h, a, P::X, b, P::Y, q * s);
        // cos phi_k(t) [z (z r - x cos + y sin) + y (y cos + x sin)]
        add2(h, a, P::Z, b, P::Z, q * cp * r);
        add2(h, a, P::Z, b, P::X, -q * cp * c);
        add2(h, a, P::Z, b, P::Y, q * cp * s);
        add2(h, a, P::Y, b, P::Y, q * cp * c);
        add2(h, a, P::Y, b, P::X, q * cp * s);
        // sin phi_k(t) [-z (y cos + x sin) + y (z r - x cos + y sin)]
        add2(h, a, P::Z, b, P::Y, -q * sp * c);
        add2(h, a, P::Z, b, P::X, -q * sp * s);
        add2(h, a, P::Y, b, P::Z, q * sp * r);
        add2(h, a, P::Y, b, P::X, -q * sp * c);
        add2(h, a, P::Y, b, P::Y, q * sp * s);
        break;
      }
      default:
        throw DomainError("kind '" + to_string(kind) +
                          "' is not an original Hamiltonian");
    }
  }
  return h;
}

PauliSum effective_partner(HamiltonianKind kind, const UniformDrive& u) {
  const Lattice chain = Lattice::chain(std::max(u.n, 1));
  switch (kind) {
    case HamiltonianKind::Org:
    case HamiltonianKind::DeltaH:
      return build_canonical(HamiltonianKind::Control, chain, u.coupling());
    case HamiltonianKind::Org_XY:
    case HamiltonianKind::Delta_XY:
      return build_canonical(HamiltonianKind::H_XY_1D, chain, u.coupling());
    case HamiltonianKind::Org_ZZ:
    case HamiltonianKind::Delta_ZZ:
      return build_canonical(HamiltonianKind::H_ZZ, chain, -u.coupling());
    default: break;
  }
  throw DomainError("kind '" + to_string(kind) + "' has no effective partner");
}

PauliSum build_delta(HamiltonianKind kind, const DeviceParams& p, double t) {
  return build_delta(kind, uniform_drive(p), t, p.phi);
}

PauliSum build_delta(HamiltonianKind kind, const UniformDrive& u, double t,
                     const std::vector<double>& phases) {
  HamiltonianKind org;
  switch (kind) {
    case HamiltonianKind::DeltaH: org = HamiltonianKind::Org; break;
    case HamiltonianKind::Delta_XY: org = HamiltonianKind::Org_XY; break;
    case HamiltonianKind::Delta_ZZ: org = HamiltonianKind::Org_ZZ; break;
    default:
      throw DomainError("kind '" + to_string(kind) + "' is not a difference");
  }
  return build_org(org, u, t, phases) - effective_partner(kind, u);
}

TimeDependentHamiltonian org_hamiltonian(HamiltonianKind kind,
                                         const UniformDrive& u,
                                         const std::vector<double>& phases) {
  TimeDependentHamiltonian td;
  td.nqubits = u.n;
  td.diagonal_part = PauliSum(u.n);
  td.generator = [kind, u, phases](double t) {
    return build_org(kind, u, t, phases);
  };
  td.frequencies = {std::abs(u.delta), 2.0 * std::abs(u.delta)};
  return td;
}

PauliSum build(const BuildRequest& r) {
  switch (r.kind) {
    case HamiltonianKind::LabFrame2Q:
      if (r.device.n != 2) {
        throw DomainError("lab_frame_2q requires a two-qubit device");
      }
      return build_lab_frame(r.device, r.t);
    case HamiltonianKind::LabFrameNQ:
      return build_lab_frame(r.device, r.t);
    case HamiltonianKind::Org:
    case HamiltonianKind::Org_XY:
    case HamiltonianKind::Org_ZZ:
      return build_org(r.kind, r.device, r.t);
    case HamiltonianKind::DeltaH:
    case HamiltonianKind::Delta_XY:
    case HamiltonianKind::Delta_ZZ:
      return build_delta(r.kind, r.device, r.t);
    case HamiltonianKind::QF_Effective:
    case HamiltonianKind::QF_EffectiveOdd:
    case HamiltonianKind::QF_EffectiveEven:
      if (r.from_device && r.lattice.dim == 1) {
        DriveMode mode = DriveMode::All;
        if (r.kind == HamiltonianKind::QF_EffectiveOdd) mode = DriveMode::OddOnly;
        if (r.kind == HamiltonianKind::QF_EffectiveEven) mode = DriveMode::EvenOnly;
        return build_qf_effective(r.device, DriveConfig{mode});
      }
      return build_canonical(r.kind, r.lattice, r.J);
    default:
      return build_canonical(r.kind, r.lattice, r.J);
  }
}

std::pair<PauliSum, PauliSum> build_xy2d_digital(const Lattice& lat, double J) {
  return split_xx_yy(build_canonical(HamiltonianKind::H_XY_2D, lat, J));
}

std::pair<PauliSum, PauliSum> split_xx_yy(const PauliSum& h) {
  PauliSum xx(h.nqubits()), yy(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    if (s.zbits() == 0) {
      xx.add(s, c);
    } else if (s.xbits() == s.zbits()) {
      yy.add(s, c);
    } else {
      throw DomainError("split_xx_yy: term " + s.label() +
                        " is neither all-x nor all-y");
    }
  }
  return {xx, yy};
}

PauliSum restrict_support(const PauliSum& h, const std::vector<int>& qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << q;
  PauliSum out(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    if (((s.xbits() | s.zbits()) & ~mask) == 0) out.add(s, c);
  }
  return out;
}

PauliSum translate(const PauliSum& h, const Lattice& lat, int di, int dj) {
  if (lat.boundary != Boundary::Periodic) {
    throw DomainError("translate requires a periodic lattice");
  }
  PauliSum out(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    PauliString moved(h.nqubits());
    for (int q = 0; q < h.nqubits(); ++q) {
      const Pauli p = s.at(q);
      if (p == P::I) continue;
      const int i = q % lat.nx + 1;
      const int j = q / lat.nx + 1;
      moved.set(lat.site(i + di, j + dj), p);
    }
    out.add(moved, c);
  }
  return out;
}

}  // namespace crda
