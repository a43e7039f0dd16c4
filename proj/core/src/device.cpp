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

#include "crda/device.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crda/errors.hpp"

namespace crda {
namespace {

bool close_rel(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::string to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "periodic";
}

Boundary boundary_from_string(std::string_view s) {
  if (s == "open") return Boundary::Open;
  if (s == "periodic") return Boundary::Periodic;
  throw DomainError("unknown boundary '" + std::string(s) +
                    "' (expected open|periodic)");
}

Lattice Lattice::chain(int n, Boundary b) {
  Lattice l{1, n, 1, b};
  l.validate();
  return l;
}

Lattice Lattice::square(int nx, int ny, Boundary b) {
  Lattice l{2, nx, ny, b};
  l.validate();
  return l;
}

int Lattice::site(int i, int j) const {
  if (boundary == Boundary::Periodic) {
    i = ((i - 1) % nx + nx) % nx + 1;
    j = ((j - 1) % ny + ny) % ny + 1;
  } else if (i < 1 || i > nx || j < 1 || j > ny) {
    return -1;
  }
  return (j - 1) * nx + (i - 1);
}

int Lattice::site(int k) const { return site(k, 1); }

bool Lattice::is_even(int qubit) const {
  const int i = qubit % nx + 1;
  const int j = qubit / nx + 1;
  return dim == 1 ? (i % 2 == 0) : ((i + j) % 2 == 0);
}

std::vector<int> Lattice::sublattice(bool even) const {
  std::vector<int> out;
  for (int q = 0; q < size(); ++q) {
    if (is_even(q) == even) out.push_back(q);
  }
  return out;
}

void Lattice::validate() const {
  if (dim != 1 && dim != 2) throw DomainError("lattice dim must be 1 or 2");
  if (nx < 1 || ny < 1) throw DomainError("lattice extents must be positive");
  if (dim == 1 && ny != 1) throw DomainError("1D lattice must have ny = 1");
  if (size() > 64) throw ResourceError("lattice exceeds 64 qubits");
  if (dim == 1 && boundary == Boundary::Periodic && nx < 3) {
    throw DomainError("periodic chain needs at least 3 sites");
  }
  if (dim == 2 && boundary == Boundary::Periodic &&
      (nx % 2 != 0 || ny % 2 != 0)) {
    throw DomainError("periodic 2D lattice needs even extents so the unit "
                      "cell tiling closes");
  }
}

std::string to_string(DriveMode m) {
  switch (m) {
    case DriveMode::All: return "all";
    case DriveMode::OddOnly: return "odd";
    case DriveMode::EvenOnly: return "even";
  }
  return "all";
}

DriveMode drive_mode_from_string(std::string_view s) {
  if (s == "all") return DriveMode::All;
  if (s == "odd" || s == "odd-only") return DriveMode::OddOnly;
  if (s == "even" || s == "even-only") return DriveMode::EvenOnly;
  throw DomainError("unknown drive mode '" + std::string(s) +
                    "' (expected all|odd|even)");
}

bool DriveConfig::is_control(int k, int n, Boundary b) const {
  if (k < 1 || k > n) return false;
  if (k == n && b == Boundary::Open) return false;
  switch (driven) {
    case DriveMode::All: return true;
    case DriveMode::OddOnly: return k % 2 == 1;
    case DriveMode::EvenOnly: return k % 2 == 0;
  }
  return false;
}

int DeviceParams::nbonds() const {
  return boundary == Boundary::Periodic ? n : n - 1;
}

double DeviceParams::xi(int k) const {
  return std::atan2(delta(k), Omega.at(static_cast<std::size_t>(k)));
}

double DeviceParams::eta(int k) const {
  return std::hypot(delta(k), Omega.at(static_cast<std::size_t>(k)));
}

void DeviceParams::validate() const {
  if (n < 1) throw DomainError("device needs at least one qubit");
  if (n > 64) throw ResourceError("device exceeds 64 qubits");
  if (boundary == Boundary::Periodic && n < 3) {
    throw DomainError("periodic device needs at least 3 qubits");
  }
  const auto check = [this](const std::vector<double>& v, std::size_t size,
                            const char* name) {
    if (v.size() != size) {
      std::ostringstream os;
      os << name << " has " << v.size() << " entries, expected " << size;
      throw DomainError(os.str());
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw DomainError(std::string(name) + " is not finite");
    }
  };
  const auto nn = static_cast<std::size_t>(n);
  check(omega_q, nn, "omega_q");
  check(omega, nn, "omega");
  check(Omega, nn, "Omega");
  check(phi, nn, "phi");
  check(g, static_cast<std::size_t>(std::max(nbonds(), 0)), "g");
}

DeviceParams DeviceParams::cr_chain(int n, double base_frequency, double delta,
                                    double Omega, double g, double phi,
                                    DriveMode mode, Boundary boundary) {
  DeviceParams p;
  p.n = n;
  p.boundary = boundary;
  const auto nn = static_cast<std::size_t>(n);
  p.omega_q.resize(nn);
  p.omega.resize(nn);
  p.Omega.assign(nn, 0.0);
  p.phi.assign(nn, 0.0);
  p.g.assign(static_cast<std::size_t>(std::max(p.nbonds(), 0)), g);
  const DriveConfig drive{mode};
  for (int k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    p.omega_q[kk] = base_frequency + (n - 1 - k) * delta;
    if (drive.is_control(k + 1, n, boundary)) {
      p.omega[kk] = p.omega_q[kk] - delta;
      p.Omega[kk] = Omega;
      p.phi[kk] = phi;
    } else {
      p.omega[kk] = p.omega_q[kk];
    }
  }
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (!std::isfinite(J)) throw DomainError("J must be finite");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive");
  if (M < 1) throw DomainError("M must be at least 1");
}

double effective_coupling(const DeviceParams& p, int k) {
  if (k < 0 || k >= p.nbonds()) throw DomainError("bond index out of range");
  const auto kk = static_cast<std::size_t>(k);
  if (p.Omega.at(kk) == 0.0) return 0.0;
  const double d = p.delta(k);
  if (d == 0.0) {
    throw DomainError("zero detuning on driven qubit " + std::to_string(k + 1));
  }
  return -p.g.at(kk) * p.Omega[kk] / (4.0 * d);
}

RegimeReport validate_regime(const DeviceParams& p,
                             const RegimeThresholds& thresholds) {
  p.validate();
  RegimeReport report;
  for (int k = 0; k < p.n; ++k) {
    if (!p.is_driven(k)) continue;
    const double d = p.delta(k);
    if (d == 0.0) {
      throw DomainError("zero detuning on driven qubit " + std::to_string(k + 1));
    }
    RegimeEntry e;
    e.qubit = k + 1;
    e.omega_ratio = std::abs(p.Omega[static_cast<std::size_t>(k)] / d);
    double g = 0.0;
    if (k < p.nbonds()) g = std::abs(p.g[static_cast<std::size_t>(k)]);
    e.coupling_ratio = g / std::abs(d);
    if (e.omega_ratio > thresholds.omega_ratio) {
      e.ok = false;
      report.warnings.push_back("qubit " + std::to_string(k + 1) +
                                ": Omega/delta = " + std::to_string(e.omega_ratio) +
                                " exceeds weak-driving threshold");
    }
    if (e.coupling_ratio > thresholds.coupling_ratio) {
      e.ok = false;
      report.warnings.push_back("qubit " + std::to_string(k + 1) +
                                ": g/delta = " + std::to_string(e.coupling_ratio) +
                                " exceeds dispersive threshold");
    }
    report.entries.push_back(e);
  }
  return report;
}

UniformDrive uniform_drive(const DeviceParams& p) {
  p.validate();
  UniformDrive u;
  u.n = p.n;
  bool first = true;
  for (int k = 0; k < p.nbonds(); ++k) {
    // Controls are recognised by their detuned drive frequency, so a
    // vanishing amplitude still identifies the control pattern.
    if (!p.is_driven(k) && p.delta(k) == 0.0) continue;
    const auto kk = static_cast<std::size_t>(k);
    const double d = p.delta(k);
    if (d == 0.0) {
      throw DomainError("zero detuning on driven qubit " + std::to_string(k + 1));
    }
    if (first) {
      u.g = p.g[kk];
      u.Omega = p.Omega[kk];
      u.delta = d;
      u.phi = p.phi[kk];
      first = false;
    } else if (!close_rel(u.g, p.g[kk]) || !close_rel(u.Omega, p.Omega[kk]) ||
               !close_rel(u.delta, d) || !close_rel(u.phi, p.phi[kk])) {
      throw DomainError("parameters are not uniform across driven controls");
    }
  }
  if (first) throw DomainError("device has no detuned control qubit");
  return u;
}

}  // namespace crda
