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

// Acceptance driver: one PASS/FAIL line per criterion with its wall time and
// budget. `--criterion <id>` runs a single criterion; `--cli <path>` names
// the crda executable used by the determinism check.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"
#include "crda/error_analysis.hpp"
#include "crda/frames.hpp"
#include "crda/hamiltonians.hpp"
#include "crda/schedule.hpp"
#include "oracles.hpp"

namespace {

using namespace crda;
using HK = HamiltonianKind;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

std::string cli_path;

DeviceParams chain(int n, double g, double Omega, double delta = 10.0) {
  return DeviceParams::cr_chain(n, 300.0, delta, Omega, g);
}

void synthesis(Outcome& o, SynthesisModel m, double per_bond) {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const DeviceParams p = chain(n, 1.0, 1e-2);  // Omega/delta = 1e-3
    const double want = per_bond * std::sqrt(n - 1.0);
    for (int k = 0; k < 20; ++k) {
      const double t = k / 20.0 * 2.0 * kPi / 10.0;
      worst = std::max(worst, std::abs(synthesis_norm_numeric(m, p, t) - want));
    }
  }
  o.detail << "max |numeric - closed form| = " << worst;
  o.require(worst <= 1e-3, "deviation above 1e-3");
}

void criterion_2(Outcome& o) {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const DeviceParams p = chain(n, 1.0, 1e-3);  // Omega/delta = 1e-4
    for (int k = 0; k < 50; ++k) {
      const double t = (k + 0.5) / 50.0 * 2.0 * kPi / 10.0;
      const double a = dyson_norm_analytic(p, t);
      worst = std::max(worst, std::abs(dyson_norm_numeric(p, t) - a) / a);
    }
  }
  o.detail << "max relative deviation = " << worst;
  o.require(worst <= 1e-6, "relative deviation above 1e-6");
}

void criterion_3(Outcome& o) {
  double worst = 0.0;
  for (auto kind : {ModelKind::Ising1D, ModelKind::XY1D}) {
    for (int n = 2; n <= 8; ++n) {
      for (double tau : {0.1, 1.0, 5.0}) {
        TargetModel m;
        m.kind = kind;
        m.lattice = Lattice::chain(n);
        m.tau = tau;
        worst = std::max(worst, block_error(m, tau));
      }
    }
  }
  o.detail << "max block distance = " << worst;
  o.require(worst <= 1e-10, "block distance above 1e-10");
}

void criterion_4(Outcome& o) {
  const std::array<std::pair<HK, HK>, 4> pairs{{{HK::H1, HK::H2},
                                                {HK::H_Even, HK::H_Odd},
                                                {HK::H_EvenPrime, HK::H_OddPrime},
                                                {HK::QF_EffectiveOdd, HK::QF_EffectiveEven}}};
  std::size_t residual_terms = 0;
  for (int n = 2; n <= 10; ++n) {
    const Lattice lat = Lattice::chain(n);
    for (const auto& [a, b] : pairs) {
      residual_terms += commutator(build_canonical(a, lat, 1.0), build_canonical(b, lat, 1.0)).size();
    }
  }
  o.detail << "nonzero commutator terms over N = 2..10: " << residual_terms;
  o.require(residual_terms == 0, "a backbone commutator is nonzero");
}

void criterion_5(Outcome& o) {
  const Matrix2 u = gate_matrix(GateKind::UE);
  const double cube = (u * u * u + Matrix2::Identity()).norm();
  o.detail << "||UE^3 + 1|| = " << cube;
  o.require(cube <= 1e-12, "UE^3 != -1");

  // Letter substitution x->z, y->x, z->y on random Pauli sums.
  std::mt19937_64 rng(2024);
  bool permutes = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    PauliSum h(n), want(n);
    for (int k = 0; k < 6; ++k) {
      const std::string label = oracle::random_label(n, rng);
      std::string mapped = label;
      for (char& c : mapped) c = c == 'X' ? 'Z' : c == 'Y' ? 'X' : c == 'Z' ? 'Y' : c;
      const Complex c(static_cast<double>(rng() % 7) - 3.0, static_cast<double>(rng() % 5));
      h.add(PauliString::from_label(label), c);
      want.add(PauliString::from_label(mapped), c);
    }
    permutes = permutes && toggle(h, GateLayer{GateKind::UE}) == want;
  }
  o.require(permutes, "UE conjugation is not the cyclic letter permutation");

  bool sums = true;
  for (int n = 2; n <= 10; ++n) {
    const Lattice lat = Lattice::chain(n);
    sums = sums && build_canonical(HK::H_E, lat, 1.0) + build_canonical(HK::H_E_Prime, lat, 1.0) +
                           build_canonical(HK::H_E_DoublePrime, lat, 1.0) ==
                       build_canonical(HK::H_Heis, lat, 1.0);
  }
  o.detail << "; permutation " << (permutes ? "exact" : "broken") << "; H_E + H_E' + H_E'' "
           << (sums ? "== H_Heis" : "!= H_Heis");
  o.require(sums, "H_E + H_E' + H_E'' differs from H_Heis");
}

void criterion_6(Outcome& o) {
  TargetModel m;
  m.kind = ModelKind::Heisenberg1D;
  m.lattice = Lattice::chain(4);
  std::vector<double> ratios;
  for (double tau : {0.02, 0.01, 0.005}) ratios.push_back(block_error(m, tau) / (tau * tau));
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  o.detail << "error/tau^2 = " << ratios[0] << ", " << ratios[1] << ", " << ratios[2];
  o.require(*hi / *lo <= 1.1, "error/tau^2 varies by more than 10%");

  const double pair = spectral_norm(heisenberg_bond_pair_commutator(1.0));
  o.detail << "; bond-pair norm = " << pair;
  o.require(std::abs(pair - 4.0 * std::sqrt(3.0)) <= 1e-6 && pair <= 12.0,
            "bond-pair norm differs from 4 sqrt 3");
  for (int n = 3; n <= 8; ++n) {
    const Lattice lat = Lattice::chain(n);
    const double da = spectral_norm(trotter_commutator_sum(TrotterModel::Heis_DA, lat, 1.0));
    const double dig = spectral_norm(trotter_commutator_sum(TrotterModel::Heis_Digital, lat, 1.0));
    o.detail << "; N=" << n << " DA " << da << " (<= " << 6.0 * n << ") digital " << dig;
    o.require(da <= 6.0 * n + 1e-9, "DA commutator norm above 6 J^2 N at N=" + std::to_string(n));
  }
}

void criterion_7(Outcome& o) {
  const ErrorReport r = table1_check(Lattice::square(4, 4));
  for (const char* name : {"table1.nonzero_pairs", "table1.nonzero_per_cell",
                           "table1.xx_xx_terms", "table1.yy_yy_terms",
                           "table1.a_plus_b_residual", "table1.coefficient_deviation"}) {
    o.detail << name << "=" << r.at(name).value << " ";
  }
  for (const auto& e : r.entries) o.require(e.pass(), e.name);
}

void criterion_8(Outcome& o) {
  SpectralNormOptions opts;
  opts.force_matrix_free = true;
  const ErrorReport r = trotter_comparison(true, Lattice::square(4, 4), 1.0, opts);
  for (const auto& e : r.entries) {
    o.detail << e.name << "=" << e.value;
    if (e.bound) o.detail << " (<= " << *e.bound << ")";
    if (e.minimum) o.detail << " (>= " << *e.minimum << ")";
    o.detail << "; ";
    o.require(e.pass(), e.name);
  }
  const ErrorReport cell = unit_cell_report();
  o.detail << "reported only:";
  for (const auto& e : cell.entries) o.detail << " " << e.name << "=" << e.value;
}

void criterion_9(Outcome& o) {
  const DeviceParams p = chain(2, 0.2, 0.5);  // g/delta = 0.02, Omega/delta = 0.05
  const ScalingReport s = verify_effective_scaling(p, 2.0 * kPi, {1.0, 0.5, 0.25});
  const double d = s.points.front().result.distance_frame;
  o.detail << "distance = " << d << ", halving ratios";
  for (std::size_t k = 1; k < s.points.size(); ++k) {
    o.detail << " " << s.points[k - 1].result.distance_frame / s.points[k].result.distance_frame;
  }
  o.detail << ", fitted exponent = " << s.exponent;
  o.require(d <= 0.05, "distance above 0.05");
  o.require(std::abs(s.exponent - 2.0) <= 0.3, "exponent outside 2.0 +- 0.3");
}

double max_uqf_defect(double ratio) {
  const DeviceParams p = chain(2, 0.2, ratio * 10.0);
  double worst = 0.0;
  for (int k = 0; k < 64; ++k) {
    worst = std::max(worst, unitarity_defect(uqf_approx(p, k / 64.0 * 2.0 * kPi / 10.0)));
  }
  return worst;
}

void criterion_10(Outcome& o) {
  const double a = max_uqf_defect(0.1), b = max_uqf_defect(0.05);
  o.detail << "defect(0.1) = " << a << ", defect(0.05) = " << b << ", ratio = " << a / b;
  o.require(a <= 0.02, "defect above 0.02 at Omega/delta = 0.1");
  o.require(std::abs(a / b - 4.0) <= 0.5, "ratio outside 4 +- 0.5");
}

std::string run_in_process(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"crda"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string run_binary(const std::vector<std::string>& args) {
  std::string cmd = "'" + cli_path + "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "popen failed";
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = pclose(pipe);
  return std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + "\n" + text;
}

void criterion_11(Outcome& o) {
  const std::vector<std::vector<std::string>> commands{
      {"hamiltonian", "--kind", "h_xy_2d", "--nx", "4"},
      {"errors", "--which", "trotter", "--model", "heis_da", "--n", "7"},
      {"errors", "--which", "unitcell"},
      {"simulate", "--model", "heisenberg", "--n", "5", "--initial", "random", "--seed", "9",
       "--blocks", "3", "--out", "csv"},
      {"compile", "--model", "xy2d", "--nx", "4", "--fuse"},
      {"verify-frames", "--delta", "10", "--Omega", "0.5", "--g", "0.2", "--t-final", "1"},
      {"--threads", "3", "--sweep", "t=0:1:5", "errors", "--which", "dyson", "--n", "3"},
  };
  int identical = 0;
  for (const auto& c : commands) {
    const std::string a = run_in_process(c), b = run_in_process(c);
    bool same = a == b && a.rfind("0\n", 0) == 0;
    if (!cli_path.empty()) same = same && run_binary(c) == a && run_binary(c) == a;
    identical += same ? 1 : 0;
    o.require(same, "differing output for " + c.front());
  }
  o.detail << identical << "/" << commands.size() << " commands byte-identical"
           << (cli_path.empty() ? " (in-process only)" : " (in-process and executable)");
}

std::vector<Criterion> criteria() {
  return {
      {"1a", "synthesis norm, control form", 10,
       [](Outcome& o) { synthesis(o, SynthesisModel::Control, 1.0 / (2.0 * std::sqrt(2.0))); }},
      {"1b", "synthesis norm, XY form", 10,
       [](Outcome& o) { synthesis(o, SynthesisModel::XY, 0.5); }},
      {"2", "first-order Dyson propagator difference", 10, criterion_2},
      {"3", "Ising and XY 1D blocks are exact", 30, criterion_3},
      {"4", "commutation backbone is exactly zero", 60, criterion_4},
      {"5", "UE cycle and Heisenberg decomposition", 60, criterion_5},
      {"6", "Heisenberg Trotter scaling and bounds", 60, criterion_6},
      {"7", "2D XY commutator table", 30, criterion_7},
      {"8", "2D XY commutator bounds and ratio", 600, criterion_8},
      {"9", "lab frame vs effective evolution", 60, criterion_9},
      {"10", "U_QF unitarity defect scaling", 60, criterion_10},
      {"11", "CLI determinism", 300, criterion_11},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = argv[++i];
    } else if (a == "--cli" && i + 1 < argc) {
      cli_path = argv[++i];
    } else {
      std::cerr << "usage: crda_acceptance [--criterion <id>] [--cli <path>]\n";
      return 2;
    }
  }
  int failures = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && c.id != only) continue;
    ++ran;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget_s, "runtime budget exceeded");
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title
              << " (" << secs << " s, budget " << c.budget_s << " s): " << o.detail.str()
              << std::endl;
  }
  if (ran == 0) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
