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

#include "crda/schedule.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "crda/errors.hpp"
#include "crda/integrator.hpp"
#include "crda/krylov.hpp"

namespace crda {

namespace {

constexpr std::array<std::pair<ModelKind, const char*>, 4> kModelNames{{
    {ModelKind::Ising1D, "ising"},
    {ModelKind::XY1D, "xy1d"},
    {ModelKind::XY2D, "xy2d"},
    {ModelKind::Heisenberg1D, "heisenberg"},
}};

/// Dimension above which analog exponentials are applied matrix-free.
constexpr int kCachedExpLimit = 10;

GateLayer gate(GateKind k, Support s = Support::all()) { return {k, s}; }

AnalogSegment analog(double tau, DriveMode mode, PauliSum h, std::string label) {
  AnalogSegment a;
  a.duration = tau;
  a.drive.driven = mode;
  a.analog = std::move(h);
  a.label = std::move(label);
  return a;
}

/// Keeps the two-site terms sitting on 1D bonds of the requested parity
/// (1-based bond k joins sites k and k + 1; odd bonds start at qubit 0).
PauliSum restrict_bond_parity(const PauliSum& h, bool odd) {
  PauliSum out(h.nqubits());
  for (const auto& [s, c] : h.terms()) {
    const std::uint64_t support = s.xbits() | s.zbits();
    if (support == 0) continue;
    int low = 0;
    while (((support >> low) & 1U) == 0) ++low;
    if (((low % 2) == 0) == odd) out.add(s, c);
  }
  return out;
}

TimeDependentHamiltonian realistic_segment(const UniformDrive& u,
                                           const std::vector<double>& phases,
                                           HamiltonianKind org,
                                           int bond_parity, GateKind frame) {
  TimeDependentHamiltonian td;
  td.nqubits = u.n;
  td.frequencies = {std::abs(u.delta), 2.0 * std::abs(u.delta)};
  td.diagonal_part = PauliSum(u.n);
  td.generator = [u, phases, org, bond_parity, frame](double t) {
    PauliSum h = build_org(org, u, t, phases);
    if (bond_parity >= 0) h = restrict_bond_parity(h, bond_parity == 1);
    if (frame != GateKind::Identity) {
      // The segment is specified in the toggled frame; undo the toggle so
      // that F^dagger (analog) F reproduces the original Hamiltonian.
      h = toggle(h, GateLayer{inverse(frame), Support::all()});
    }
    return h;
  };
  return td;
}

std::vector<Step> compile_block(const TargetModel& m) {
  const Lattice& lat = m.lattice;
  const double J = m.J;
  const double tau = m.tau;
  std::vector<Step> b;
  switch (m.kind) {
    case ModelKind::Ising1D: {
      const GateKind h = GateKind::Hadamard;
      b.emplace_back(gate(h));
      b.emplace_back(analog(tau, DriveMode::OddOnly,
                            build_canonical(HamiltonianKind::QF_EffectiveOdd, lat, J),
                            "qf_effective_odd"));
      b.emplace_back(gate(h));
      b.emplace_back(DriveSwitch{DriveMode::OddOnly, DriveMode::EvenOnly});
      b.emplace_back(gate(h));
      b.emplace_back(analog(tau, DriveMode::EvenOnly,
                            build_canonical(HamiltonianKind::QF_EffectiveEven, lat, J),
                            "qf_effective_even"));
      b.emplace_back(gate(h));
      break;
    }
    case ModelKind::XY1D: {
      const PauliSum control = build_canonical(HamiltonianKind::Control, lat, J);
      for (const Support& s : {Support::even(), Support::odd()}) {
        b.emplace_back(gate(GateKind::Rx90));
        b.emplace_back(gate(GateKind::Hadamard, s));
        b.emplace_back(analog(tau, DriveMode::All, control, "control"));
        b.emplace_back(gate(GateKind::Hadamard, s));
        b.emplace_back(gate(GateKind::Rx90Dag));
      }
      break;
    }
    case ModelKind::Heisenberg1D: {
      const PauliSum control = build_canonical(HamiltonianKind::Control, lat, J);
      for (int rep = 0; rep < 3; ++rep) {
        b.emplace_back(gate(GateKind::Hadamard, Support::even()));
        b.emplace_back(analog(tau, DriveMode::All, control, "control"));
        b.emplace_back(gate(GateKind::Hadamard, Support::even()));
        b.emplace_back(gate(GateKind::UE));
      }
      break;
    }
    case ModelKind::XY2D: {
      const PauliSum control = build_canonical(HamiltonianKind::Control, lat, J);
      const Support sub_a = Support::sites(lat.sublattice(true));
      const Support sub_b = Support::sites(lat.sublattice(false));
      for (const Support& s : {sub_b, sub_a}) {
        b.emplace_back(gate(GateKind::Rx90));
        b.emplace_back(gate(GateKind::Hadamard, s));
        b.emplace_back(analog(tau, DriveMode::All, control, "control_2d"));
        b.emplace_back(gate(GateKind::Hadamard, s));
        b.emplace_back(gate(GateKind::Rx90Dag));
      }
      break;
    }
  }
  return b;
}

void make_realistic(Schedule& s, const DeviceParams& device) {
  const TargetModel& m = s.model;
  if (m.kind == ModelKind::XY2D) {
    throw DomainError(
        "realistic mode is only defined for 1D chains; the 2D model has no "
        "original (pre-rotating-wave) Hamiltonian");
  }
  if (m.lattice.boundary != Boundary::Open) {
    throw DomainError("realistic mode requires an open chain");
  }
  if (device.n != m.lattice.size()) {
    throw DomainError("realistic mode: device has " + std::to_string(device.n) +
                      " qubits but the model has " +
                      std::to_string(m.lattice.size()));
  }
  const UniformDrive u = uniform_drive(device);
  if (u.n != device.n) {
    throw DomainError("realistic mode: uniform drive covers a different chain");
  }
  // The model coupling is dictated by the device.
  s.model.J = m.kind == ModelKind::Ising1D ? -u.coupling() : u.coupling();
  const TargetModel resolved = s.model;
  s.block = compile_block(resolved);
  int odd_even = 1;
  for (auto& step : s.block) {
    auto* a = std::get_if<AnalogSegment>(&step);
    if (a == nullptr) continue;
    if (m.kind == ModelKind::Ising1D) {
      a->realistic = realistic_segment(u, device.phi, HamiltonianKind::Org_ZZ,
                                       odd_even, GateKind::Hadamard);
      odd_even = 0;
    } else {
      a->realistic = org_hamiltonian(HamiltonianKind::Org, u, device.phi);
    }
    a->label = "original_" + a->label;
  }
  s.realistic = true;
}

template <typename F>
void for_each_gate_product(const Step& step, int n, F&& f) {
  if (const auto* g = std::get_if<GateLayer>(&step)) {
    f(SiteOperators::from_layer(*g, n));
  } else if (const auto* fl = std::get_if<FusedLayer>(&step)) {
    f(fl->ops);
  }
}

long realistic_steps(const AnalogSegment& a, double t0) {
  const auto& td = *a.realistic;
  double l1 = 0.0;
  for (const auto& [s, c] : td(t0).terms()) l1 += std::abs(c);
  const double by_freq = a.duration * td.max_frequency() * 40.0 /
                         (2.0 * std::numbers::pi);
  const double by_norm = a.duration * l1 / 0.05;
  return std::max<long>(16, static_cast<long>(std::ceil(std::max(by_freq, by_norm))));
}

}  // namespace

std::string to_string(ModelKind m) {
  for (const auto& [k, name] : kModelNames) {
    if (k == m) return name;
  }
  throw DomainError("unknown model kind");
}

ModelKind model_kind_from_string(std::string_view s) {
  for (const auto& [k, name] : kModelNames) {
    if (s == name) return k;
  }
  throw DomainError("unknown model '" + std::string(s) +
                    "' (expected ising, xy1d, xy2d or heisenberg)");
}

void TargetModel::validate() const {
  lattice.validate();
  const bool two_d = kind == ModelKind::XY2D;
  if (two_d != (lattice.dim == 2)) {
    throw DomainError("model '" + to_string(kind) + "' needs a " +
                      (two_d ? "2D square lattice" : "1D chain"));
  }
  if (lattice.size() < 2) throw DomainError("model needs at least two sites");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("tau must be positive");
  }
  if (M < 1) throw DomainError("M must be at least 1");
  if (!std::isfinite(J)) throw DomainError("J must be finite");
  if (kind == ModelKind::Ising1D && lattice.boundary == Boundary::Periodic &&
      lattice.size() % 2 != 0) {
    throw DomainError("the periodic Ising protocol needs an even chain");
  }
  if (kind == ModelKind::XY1D && lattice.boundary == Boundary::Periodic &&
      lattice.size() % 2 != 0) {
    throw DomainError("the periodic XY protocol needs an even chain");
  }
}

int Schedule::gate_layer_count() const {
  return static_cast<int>(std::count_if(block.begin(), block.end(), [](const Step& s) {
    return std::holds_alternative<GateLayer>(s) || std::holds_alternative<FusedLayer>(s);
  }));
}

int Schedule::analog_segment_count() const {
  return static_cast<int>(std::count_if(block.begin(), block.end(), [](const Step& s) {
    return std::holds_alternative<AnalogSegment>(s);
  }));
}

double Schedule::analog_time_per_block() const {
  double t = 0.0;
  for (const auto& s : block) {
    if (const auto* a = std::get_if<AnalogSegment>(&s)) t += a->duration;
  }
  return t;
}

PauliSum target_hamiltonian(const TargetModel& m) {
  switch (m.kind) {
    case ModelKind::Ising1D:
      return build_canonical(HamiltonianKind::H_ZZ, m.lattice, m.J);
    case ModelKind::XY1D:
      return build_canonical(HamiltonianKind::H_XY_1D, m.lattice, m.J);
    case ModelKind::XY2D:
      return build_canonical(HamiltonianKind::H_XY_2D, m.lattice, m.J);
    case ModelKind::Heisenberg1D:
      return build_canonical(HamiltonianKind::H_Heis, m.lattice, m.J);
  }
  throw DomainError("unknown model kind");
}

Schedule compile(const TargetModel& m, const CompileOptions& opts) {
  m.validate();
  Schedule s;
  s.nqubits = m.lattice.size();
  s.model = m;
  s.repetitions = m.M;
  s.block = compile_block(m);
  if (opts.realistic) {
    if (!opts.device) {
      throw DomainError("realistic mode needs device parameters");
    }
    make_realistic(s, *opts.device);
  }
  if (opts.fuse_across_blocks) {
    std::vector<Step> unrolled;
    unrolled.reserve(s.block.size() * static_cast<std::size_t>(s.repetitions));
    for (int r = 0; r < s.repetitions; ++r) {
      unrolled.insert(unrolled.end(), s.block.begin(), s.block.end());
    }
    s.block = std::move(unrolled);
    s.repetitions = 1;
  }
  if (opts.fuse || opts.fuse_across_blocks) s = fuse(s);
  return s;
}

Schedule fuse(const Schedule& s) {
  const int n = s.nqubits;
  Schedule out = s;
  out.block.clear();
  out.fused = true;
  SiteOperators acc = SiteOperators::identity(n);
  std::vector<GateLayer> parts;
  std::vector<Step> switches;
  auto flush = [&] {
    if (parts.size() == 1) {
      out.block.emplace_back(parts.front());
    } else if (!parts.empty() && !acc.is_identity()) {
      out.block.emplace_back(FusedLayer{acc, parts});
    }
    for (auto& sw : switches) out.block.push_back(std::move(sw));
    acc = SiteOperators::identity(n);
    parts.clear();
    switches.clear();
  };
  for (const auto& step : s.block) {
    if (const auto* g = std::get_if<GateLayer>(&step)) {
      acc.then(SiteOperators::from_layer(*g, n));
      parts.push_back(*g);
    } else if (const auto* fl = std::get_if<FusedLayer>(&step)) {
      acc.then(fl->ops);
      parts.insert(parts.end(), fl->parts.begin(), fl->parts.end());
    } else if (std::holds_alternative<DriveSwitch>(step)) {
      switches.push_back(step);
    } else {
      flush();
      out.block.push_back(step);
    }
  }
  flush();
  return out;
}

std::vector<PauliSum> segment_effective_hamiltonians(const Schedule& s) {
  const int n = s.nqubits;
  SiteOperators frame = SiteOperators::identity(n);
  std::vector<PauliSum> out;
  for (const auto& step : s.block) {
    for_each_gate_product(step, n, [&](const SiteOperators& ops) { frame.then(ops); });
    if (const auto* a = std::get_if<AnalogSegment>(&step)) {
      out.push_back(toggle(a->analog, frame));
    }
  }
  return out;
}

bool block_frame_closes(const Schedule& s) {
  const int n = s.nqubits;
  SiteOperators frame = SiteOperators::identity(n);
  for (const auto& step : s.block) {
    for_each_gate_product(step, n, [&](const SiteOperators& ops) { frame.then(ops); });
  }
  return frame.is_identity(1e-10);
}

DenseMatrix block_unitary(const Schedule& s, int block_index, int dense_limit) {
  const int n = s.nqubits;
  if (n > dense_limit) {
    throw ResourceError("block_unitary: " + std::to_string(n) +
                        " qubits exceeds the dense limit of " +
                        std::to_string(dense_limit));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  double t = block_index * s.analog_time_per_block();
  for (const auto& step : s.block) {
    for_each_gate_product(step, n, [&](const SiteOperators& ops) {
      u = site_operators_unitary(ops, dense_limit) * u;
    });
    if (const auto* a = std::get_if<AnalogSegment>(&step)) {
      if (a->realistic) {
        IntegratorOptions o;
        o.dense_limit = dense_limit;
        u = propagate(*a->realistic, t, t + a->duration, o).propagator * u;
      } else {
        u = expm_hermitian(a->analog, a->duration, dense_limit) * u;
      }
      t += a->duration;
    }
  }
  return u;
}

DenseMatrix schedule_unitary(const Schedule& s, int dense_limit) {
  DenseMatrix u = block_unitary(s, 0, dense_limit);
  if (s.realistic) {
    for (int b = 1; b < s.repetitions; ++b) u = block_unitary(s, b, dense_limit) * u;
    return u;
  }
  DenseMatrix total = u;
  for (int b = 1; b < s.repetitions; ++b) total = u * total;
  return total;
}

std::vector<Observable> parse_observables(const std::vector<std::string>& specs,
                                          int nqubits) {
  std::vector<Observable> out;
  for (const auto& spec : specs) {
    if (spec == "zk") {
      for (int q = 0; q < nqubits; ++q) {
        out.push_back({"z" + std::to_string(q + 1),
                       PauliSum(nqubits, {{PauliString::single(nqubits, q, Pauli::Z), 1.0}})});
      }
    } else if (spec == "sz-total") {
      PauliSum h(nqubits);
      for (int q = 0; q < nqubits; ++q) {
        h.add(PauliString::single(nqubits, q, Pauli::Z), 0.5);
      }
      out.push_back({"sz_total", h});
    } else if (spec.rfind("pauli:", 0) == 0) {
      const std::string label = spec.substr(6);
      const PauliString p = PauliString::from_label(label);
      if (p.nqubits() != nqubits) {
        throw DomainError("observable '" + spec + "' has " +
                          std::to_string(p.nqubits()) + " sites, expected " +
                          std::to_string(nqubits));
      }
      out.push_back({label, PauliSum(nqubits, {{p, 1.0}})});
    } else {
      throw DomainError("unknown observable '" + spec +
                        "' (expected zk, sz-total or pauli:<label>)");
    }
  }
  return out;
}

namespace {

/// Applies blocks with per-segment exponentials cached when small.
class BlockApplier {
 public:
  explicit BlockApplier(const Schedule& s) : s_(s) {}

  void apply(StateVector& psi, int block_index) {
    const int n = s_.nqubits;
    double t = block_index * s_.analog_time_per_block();
    for (std::size_t i = 0; i < s_.block.size(); ++i) {
      const Step& step = s_.block[i];
      for_each_gate_product(step, n,
                            [&](const SiteOperators& ops) { apply_site_operators(ops, psi); });
      const auto* a = std::get_if<AnalogSegment>(&step);
      if (a == nullptr) continue;
      if (a->realistic) {
        psi = propagate_state(*a->realistic, t, t + a->duration, psi,
                              realistic_steps(*a, t));
      } else if (n <= kCachedExpLimit) {
        auto it = cache_.find(i);
        if (it == cache_.end()) {
          it = cache_.emplace(i, expm_hermitian(a->analog, a->duration, n)).first;
        }
        psi = it->second * psi;
      } else {
        psi = expm_multiply(a->analog, a->duration, psi);
      }
      t += a->duration;
    }
  }

 private:
  const Schedule& s_;
  std::map<std::size_t, DenseMatrix> cache_;
};

}  // namespace

StateVector apply_block(const Schedule& s, const StateVector& psi, int block_index) {
  if (psi.size() != (Eigen::Index{1} << s.nqubits)) {
    throw DomainError("apply_block: state size does not match the schedule");
  }
  StateVector out = psi;
  BlockApplier(s).apply(out, block_index);
  return out;
}

std::vector<SimulationRow> simulate(const Schedule& s, const StateVector& psi0,
                                    const std::vector<Observable>& observables) {
  if (psi0.size() != (Eigen::Index{1} << s.nqubits)) {
    throw DomainError("simulate: initial state size does not match the schedule");
  }
  BlockApplier applier(s);
  StateVector psi = psi0;
  std::vector<SimulationRow> rows;
  rows.reserve(static_cast<std::size_t>(s.repetitions));
  auto record = [&](int b) {
    SimulationRow row;
    row.block = b;
    row.time = b * s.model.tau;
    row.norm = psi.norm();
    for (const auto& o : observables) row.values.push_back(expectation(o.op, psi).real());
    rows.push_back(std::move(row));
  };
  for (int b = 0; b < s.repetitions; ++b) {
    applier.apply(psi, b);
    record(b + 1);
  }
  return rows;
}

double block_error(const TargetModel& m, double tau, const BlockErrorOptions& opts) {
  TargetModel one = m;
  one.tau = tau;
  one.M = 1;
  const Schedule s = compile(one);
  const PauliSum h = target_hamiltonian(one);
  const int n = s.nqubits;
  if (n <= opts.dense_limit) {
    return phase_insensitive_distance(block_unitary(s, 0, opts.dense_limit),
                                      expm_hermitian(h, tau, opts.dense_limit));
  }
  // Random-state estimate: for Haar-like states E|A psi|^2 = tr(A^dag A)/d,
  // so the mean squared difference reproduces the normalized Frobenius
  // distance; the global phase is fitted from the summed overlaps.
  std::vector<StateVector> got, want;
  Complex overlap = 0.0;
  BlockApplier applier(s);
  for (int r = 0; r < opts.samples; ++r) {
    const StateVector psi = random_state(n, opts.seed + static_cast<std::uint64_t>(r));
    StateVector a = psi;
    applier.apply(a, 0);
    StateVector b = expm_multiply(h, tau, psi);
    overlap += b.dot(a);
    got.push_back(std::move(a));
    want.push_back(std::move(b));
  }
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
  double sum = 0.0;
  for (std::size_t r = 0; r < got.size(); ++r) {
    sum += (got[r] - phase * want[r]).squaredNorm();
  }
  return std::sqrt(sum / static_cast<double>(got.size()));
}

nlohmann::json to_json(const Schedule& s) {
  using nlohmann::json;
  auto layer_json = [](const GateLayer& g) {
    return json{{"type", "gate"}, {"gate", to_string(g.kind)},
                {"support", g.support.describe()}};
  };
  json steps = json::array();
  for (const auto& step : s.block) {
    if (const auto* g = std::get_if<GateLayer>(&step)) {
      steps.push_back(layer_json(*g));
    } else if (const auto* fl = std::get_if<FusedLayer>(&step)) {
      json parts = json::array();
      for (const auto& p : fl->parts) parts.push_back(layer_json(p));
      steps.push_back(json{{"type", "fused"}, {"parts", parts}});
    } else if (const auto* a = std::get_if<AnalogSegment>(&step)) {
      json j{{"type", "analog"},
             {"duration", a->duration},
             {"drive", to_string(a->drive.driven)},
             {"label", a->label},
             {"time_dependent", a->realistic.has_value()}};
      if (!a->realistic) j["hamiltonian"] = to_json(a->analog);
      steps.push_back(std::move(j));
    } else if (const auto* d = std::get_if<DriveSwitch>(&step)) {
      steps.push_back(json{{"type", "drive_switch"},
                           {"from", to_string(d->from)},
                           {"to", to_string(d->to)}});
    }
  }
  return json{{"model", to_string(s.model.kind)},
              {"nqubits", s.nqubits},
              {"J", s.model.J},
              {"tau", s.model.tau},
              {"M", s.model.M},
              {"repetitions", s.repetitions},
              {"fused", s.fused},
              {"realistic", s.realistic},
              {"gate_layers", s.gate_layer_count()},
              {"analog_segments", s.analog_segment_count()},
              {"frame_closes", block_frame_closes(s)},
              {"block", steps}};
}

}  // namespace crda
