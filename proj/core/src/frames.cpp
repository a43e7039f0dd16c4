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

#include "crda/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crda/errors.hpp"
#include "crda/hamiltonians.hpp"

namespace crda {
namespace {

constexpr Complex kI{0.0, 1.0};

Matrix2 pauli_matrix(Pauli p) {
  Matrix2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

DenseMatrix tensor(const std::vector<Matrix2>& ops, int dense_limit) {
  const int n = static_cast<int>(ops.size());
  if (n > dense_limit) {
    throw ResourceError("dense operator on " + std::to_string(n) +
                        " qubits exceeds the dense limit of " +
                        std::to_string(dense_limit));
  }
  DenseMatrix m = DenseMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) m = kron(ops[static_cast<std::size_t>(q)], m);
  return m;
}

bool is_identity_up_to_phase(const Matrix2& m, double tol) {
  return std::abs(m(0, 1)) < tol && std::abs(m(1, 0)) < tol &&
         std::abs(m(0, 0) - m(1, 1)) < tol;
}

struct Entry {
  GateKind kind;
  const char* name;
};
constexpr std::array<Entry, 8> kGateNames{{
    {GateKind::Identity, "identity"},
    {GateKind::Hadamard, "hadamard"},
    {GateKind::Rx90, "rx90"},
    {GateKind::Rx90Dag, "rx90_dag"},
    {GateKind::S, "s"},
    {GateKind::UE, "ue"},
    {GateKind::UEDag, "ue_dag"},
    {GateKind::UE2, "ue2"},
}};

}  // namespace

std::string to_string(GateKind g) {
  for (const auto& e : kGateNames) {
    if (e.kind == g) return e.name;
  }
  return "unknown";
}

GateKind gate_kind_from_string(std::string_view s) {
  for (const auto& e : kGateNames) {
    if (s == e.name) return e.kind;
  }
  throw DomainError("unknown gate kind '" + std::string(s) + "'");
}

Matrix2 gate_matrix(GateKind g) {
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix2 id = pauli_matrix(Pauli::I);
  const Matrix2 x = pauli_matrix(Pauli::X);
  const Matrix2 y = pauli_matrix(Pauli::Y);
  const Matrix2 z = pauli_matrix(Pauli::Z);
  switch (g) {
    case GateKind::Identity: return id;
    case GateKind::Hadamard: return r * (x + z);
    case GateKind::Rx90: return r * (id - kI * x);
    case GateKind::Rx90Dag: return r * (id + kI * x);
    case GateKind::S: {
      Matrix2 s;
      s << 1, 0, 0, kI;
      return s;
    }
    case GateKind::UE: return 0.5 * (id - kI * (x + y + z));
    case GateKind::UEDag: return 0.5 * (id + kI * (x + y + z));
    case GateKind::UE2: {
      const Matrix2 ue = 0.5 * (id - kI * (x + y + z));
      return ue * ue;
    }
  }
  return id;
}

GateKind inverse(GateKind g) {
  switch (g) {
    case GateKind::Rx90: return GateKind::Rx90Dag;
    case GateKind::Rx90Dag: return GateKind::Rx90;
    case GateKind::UE: return GateKind::UEDag;
    case GateKind::UEDag: return GateKind::UE;
    case GateKind::UE2: return GateKind::UE;  // UE^3 = -1
    case GateKind::S:
      throw DomainError("the S layer has no inverse kind in the gate set");
    default: return g;
  }
}

Support Support::sites(std::vector<int> qubits) {
  std::sort(qubits.begin(), qubits.end());
  qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
  return {Kind::Explicit, std::move(qubits)};
}

std::vector<int> Support::resolve(int n) const {
  std::vector<int> out;
  switch (kind) {
    case Kind::All:
      for (int q = 0; q < n; ++q) out.push_back(q);
      break;
    case Kind::Even:
      for (int q = 1; q < n; q += 2) out.push_back(q);
      break;
    case Kind::Odd:
      for (int q = 0; q < n; q += 2) out.push_back(q);
      break;
    case Kind::Explicit:
      for (int q : qubits) {
        if (q < 0 || q >= n) throw DomainError("support qubit out of range");
        out.push_back(q);
      }
      break;
  }
  return out;
}

std::string Support::describe() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Even: return "even";
    case Kind::Odd: return "odd";
    case Kind::Explicit: break;
  }
  std::string s = "sites:";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(qubits[i] + 1);
  }
  return s;
}

SiteClifford SiteClifford::compose(const SiteClifford& first,
                                   const SiteClifford& second) {
  SiteClifford out;
  for (int p = 1; p < 4; ++p) {
    const Pauli mid = second.image[static_cast<std::size_t>(p)];
    const auto m = static_cast<std::size_t>(mid);
    out.image[static_cast<std::size_t>(p)] = first.image[m];
    out.sign[static_cast<std::size_t>(p)] =
        second.sign[static_cast<std::size_t>(p)] * first.sign[m];
  }
  return out;
}

bool SiteClifford::is_identity() const {
  return image == SiteClifford{}.image && sign == SiteClifford{}.sign;
}

SiteClifford clifford_map(const Matrix2& u) {
  SiteClifford out;
  for (int p = 1; p < 4; ++p) {
    const Matrix2 m = u.adjoint() * pauli_matrix(static_cast<Pauli>(p)) * u;
    bool found = false;
    for (int q = 1; q < 4 && !found; ++q) {
      const Matrix2 pq = pauli_matrix(static_cast<Pauli>(q));
      for (int s : {1, -1}) {
        if ((m - static_cast<double>(s) * pq).cwiseAbs().maxCoeff() < 1e-10) {
          out.image[static_cast<std::size_t>(p)] = static_cast<Pauli>(q);
          out.sign[static_cast<std::size_t>(p)] = s;
          found = true;
          break;
        }
      }
    }
    if (!found) throw DomainError("single-qubit operator is not Clifford");
  }
  return out;
}

SiteOperators SiteOperators::identity(int n) {
  return {std::vector<Matrix2>(static_cast<std::size_t>(n), Matrix2::Identity())};
}

SiteOperators SiteOperators::from_layer(const GateLayer& l, int n) {
  SiteOperators s = identity(n);
  const Matrix2 g = gate_matrix(l.kind);
  for (int q : l.support.resolve(n)) s.ops[static_cast<std::size_t>(q)] = g;
  return s;
}

void SiteOperators::then(const SiteOperators& later) {
  if (later.ops.size() != ops.size()) {
    throw DomainError("site operator sizes differ");
  }
  for (std::size_t q = 0; q < ops.size(); ++q) ops[q] = later.ops[q] * ops[q];
}

bool SiteOperators::is_identity(double tol) const {
  return std::all_of(ops.begin(), ops.end(), [tol](const Matrix2& m) {
    return is_identity_up_to_phase(m, tol);
  });
}

DenseMatrix layer_unitary(const GateLayer& l, int n, int dense_limit) {
  return site_operators_unitary(SiteOperators::from_layer(l, n), dense_limit);
}

DenseMatrix site_operators_unitary(const SiteOperators& s, int dense_limit) {
  return tensor(s.ops, dense_limit);
}

PauliSum toggle(const PauliSum& h, const GateLayer& l) {
  return toggle(h, SiteOperators::from_layer(l, h.nqubits()));
}

PauliSum toggle(const PauliSum& h, const SiteOperators& s) {
  const int n = h.nqubits();
  if (static_cast<int>(s.ops.size()) != n) {
    throw DomainError("toggle: site operator count does not match qubits");
  }
  std::vector<SiteClifford> maps(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const auto& m = s.ops[static_cast<std::size_t>(q)];
    if (!is_identity_up_to_phase(m, 1e-14)) {
      maps[static_cast<std::size_t>(q)] = clifford_map(m);
    }
  }
  PauliSum out(n);
  for (const auto& [str, c] : h.terms()) {
    PauliString mapped(n);
    int sign = 1;
    for (int q = 0; q < n; ++q) {
      const Pauli p = str.at(q);
      if (p == Pauli::I) continue;
      const auto& m = maps[static_cast<std::size_t>(q)];
      mapped.set(q, m.image[static_cast<std::size_t>(p)]);
      sign *= m.sign[static_cast<std::size_t>(p)];
    }
    out.add(mapped, static_cast<double>(sign) * c);
  }
  return out;
}

void apply_site_operators(const SiteOperators& s, StateVector& v) {
  const int n = static_cast<int>(s.ops.size());
  if (v.size() != (Eigen::Index{1} << n)) {
    throw DomainError("apply_site_operators: size mismatch");
  }
  for (int q = 0; q < n; ++q) {
    const Matrix2& m = s.ops[static_cast<std::size_t>(q)];
    if (m == Matrix2::Identity()) continue;
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i & bit) continue;
      const Complex a = v[i];
      const Complex b = v[i | bit];
      v[i] = m(0, 0) * a + m(0, 1) * b;
      v[i | bit] = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

// --- Rotating-frame pipeline -------------------------------------------

DenseMatrix frame_u12(const DeviceParams& p, double t) {
  std::vector<Matrix2> ops;
  for (int k = 0; k < p.n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const double th = p.omega[kk] * t + p.phi[kk];
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::polar(1.0, -0.5 * th);
    m(1, 1) = std::polar(1.0, 0.5 * th);
    ops.push_back(m);
  }
  return tensor(ops, kDefaultDenseLimit);
}

DenseMatrix frame_u3(const DeviceParams& p) {
  std::vector<Matrix2> ops;
  for (int k = 0; k < p.n; ++k) {
    const double xi = p.xi(k);
    ops.push_back(std::cos(0.5 * xi) * Matrix2::Identity() +
                  kI * std::sin(0.5 * xi) * pauli_matrix(Pauli::Y));
  }
  return tensor(ops, kDefaultDenseLimit);
}

DenseMatrix frame_u4(const DeviceParams& p, double t) {
  std::vector<Matrix2> ops;
  for (int k = 0; k < p.n; ++k) {
    const double a = 0.5 * p.eta(k) * t;
    ops.push_back(std::cos(a) * Matrix2::Identity() -
                  kI * std::sin(a) * pauli_matrix(Pauli::X));
  }
  return tensor(ops, kDefaultDenseLimit);
}

DenseMatrix frame_pipeline_unitary(const DeviceParams& p, double t) {
  p.validate();
  return frame_u12(p, t) * frame_u3(p) * frame_u4(p, t);
}

namespace {

DenseMatrix frame_derivative(const DeviceParams& p, double t) {
  PauliSum g12(p.n), g4(p.n);
  for (int k = 0; k < p.n; ++k) {
    g12.add(PauliString::single(p.n, k, Pauli::Z),
            0.5 * p.omega[static_cast<std::size_t>(k)]);
    g4.add(PauliString::single(p.n, k, Pauli::X), 0.5 * p.eta(k));
  }
  const DenseMatrix u12 = frame_u12(p, t), u3 = frame_u3(p), u4 = frame_u4(p, t);
  return -kI * to_dense(g12) * u12 * u3 * u4 - kI * u12 * u3 * u4 * to_dense(g4);
}

}  // namespace

DenseMatrix frame_hamiltonian(const DeviceParams& p, double t) {
  const DenseMatrix uf = frame_pipeline_unitary(p, t);
  const DenseMatrix h = to_dense(build_lab_frame(p, t));
  return uf.adjoint() * h * uf - kI * uf.adjoint() * frame_derivative(p, t);
}

double frame_identity_residual(const DeviceParams& p, double t) {
  double wmax = 1.0;
  for (int k = 0; k < p.n; ++k) {
    wmax = std::max({wmax, std::abs(p.omega[static_cast<std::size_t>(k)]), p.eta(k)});
  }
  const double eps = 1e-4 / wmax;
  const DenseMatrix fd =
      (frame_pipeline_unitary(p, t + eps) - frame_pipeline_unitary(p, t - eps)) /
      (2.0 * eps);
  const DenseMatrix an = frame_derivative(p, t);
  return (fd - an).cwiseAbs().maxCoeff() / std::max(an.cwiseAbs().maxCoeff(), 1e-300);
}

DenseMatrix uqf_approx(const DeviceParams& p, double t) {
  p.validate();
  std::vector<Matrix2> ops;
  const Matrix2 id = Matrix2::Identity();
  const Matrix2 x = pauli_matrix(Pauli::X), y = pauli_matrix(Pauli::Y),
                z = pauli_matrix(Pauli::Z);
  for (int k = 0; k < p.n; ++k) {
    const double d = p.delta(k);
    if (d == 0.0) {
      ops.push_back(id);
      continue;
    }
    const double r = p.Omega[static_cast<std::size_t>(k)] / d;
    const Matrix2 f =
        (id + kI * y +
         (0.5 * r) * ((id - kI * y) * std::cos(d * t) + kI * (z - x) * std::sin(d * t))) /
        std::sqrt(2.0);
    ops.push_back(f);
  }
  return tensor(ops, kDefaultDenseLimit);
}

FrameVerification verify_effective(const DeviceParams& p, double t_final,
                                   const IntegratorOptions& opts) {
  p.validate();
  if (p.n < 2) throw DomainError("verify_effective needs at least two qubits");
  if (p.n > opts.dense_limit) {
    throw ResourceError("verify_effective is limited to the dense limit");
  }
  const RegimeReport regime = validate_regime(p);
  FrameVerification v;
  for (const auto& e : regime.entries) {
    v.omega_ratio = std::max(v.omega_ratio, e.omega_ratio);
    v.coupling_ratio = std::max(v.coupling_ratio, e.coupling_ratio);
  }
  const PropagationResult lab = propagate(lab_frame_hamiltonian(p), 0.0, t_final, opts);
  v.steps = lab.steps;
  v.halving_change = lab.halving_change;
  v.effective = build_qf_effective_mixed(p);
  const DenseMatrix target = expm_hermitian(v.effective, t_final);
  const DenseMatrix uf_t = frame_pipeline_unitary(p, t_final);
  const DenseMatrix uf_0 = frame_pipeline_unitary(p, 0.0);
  v.distance_frame =
      phase_insensitive_distance(uf_t.adjoint() * lab.propagator * uf_0, target);
  v.distance_lab =
      phase_insensitive_distance(lab.propagator, uf_t * target * uf_0.adjoint());
  return v;
}

ScalingReport verify_effective_scaling(const DeviceParams& p, double t_final,
                                       const std::vector<double>& factors,
                                       const IntegratorOptions& opts) {
  if (factors.size() < 2) throw DomainError("scaling needs at least two factors");
  ScalingReport r;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double f : factors) {
    if (!(f > 0.0)) throw DomainError("scaling factors must be positive");
    DeviceParams q = p;
    for (auto& g : q.g) g *= f;
    for (auto& o : q.Omega) o *= f;
    ScalingPoint pt{f, verify_effective(q, t_final, opts)};
    const double lx = std::log(f);
    const double ly = std::log(std::max(pt.result.distance_frame, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    r.points.push_back(std::move(pt));
  }
  const double m = static_cast<double>(factors.size());
  r.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return r;
}

nlohmann::json to_json(const FrameVerification& v) {
  return {{"distance_frame", v.distance_frame},
          {"distance_lab", v.distance_lab},
          {"omega_over_delta", v.omega_ratio},
          {"g_over_delta", v.coupling_ratio},
          {"steps", v.steps},
          {"halving_change", v.halving_change},
          {"effective", to_json(v.effective)}};
}

nlohmann::json to_json(const ScalingReport& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : r.points) {
    nlohmann::json j = to_json(p.result);
    j["factor"] = p.factor;
    pts.push_back(j);
  }
  return {{"points", pts}, {"exponent", r.exponent}};
}

}  // namespace crda
