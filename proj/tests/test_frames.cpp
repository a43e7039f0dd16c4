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

#include <random>

#include <gtest/gtest.h>

#include "crda/errors.hpp"
#include "crda/frames.hpp"
#include "crda/hamiltonians.hpp"
#include "crda/krylov.hpp"
#include "oracles.hpp"

namespace crda {
namespace {

const std::vector<GateKind> kGates{GateKind::Identity, GateKind::Hadamard, GateKind::Rx90,
                                   GateKind::Rx90Dag,  GateKind::S,        GateKind::UE,
                                   GateKind::UEDag,    GateKind::UE2};

TEST(Gates, UnitaryAndNamed) {
  for (const auto g : kGates) {
    const Matrix2 m = gate_matrix(g);
    EXPECT_LT((m.adjoint() * m - Matrix2::Identity()).norm(), 1e-14) << to_string(g);
    EXPECT_EQ(gate_kind_from_string(to_string(g)), g);
  }
}

TEST(Gates, InversesCancel) {
  for (const auto g : kGates) {
    if (g == GateKind::S) {
      EXPECT_THROW(inverse(g), DomainError);
      continue;
    }
    // Inverse up to a global phase (UE^2 and UE are inverse only up to -1).
    const Matrix2 prod = gate_matrix(inverse(g)) * gate_matrix(g);
    EXPECT_NEAR(std::abs(prod(0, 0)), 1.0, 1e-14) << to_string(g);
    EXPECT_LT((prod - prod(0, 0) * Matrix2::Identity()).norm(), 1e-14) << to_string(g);
  }
}

TEST(Gates, CyclicRotationCubesToMinusIdentity) {
  const Matrix2 u = gate_matrix(GateKind::UE);
  EXPECT_LT((u * u * u + Matrix2::Identity()).norm(), 1e-12);
  EXPECT_LT((u * u - gate_matrix(GateKind::UE2)).norm(), 1e-14);
}

// U^dagger P U for each single-qubit Pauli, against the dense definition.
TEST(Clifford, ConjugationTables) {
  struct Case {
    GateKind g;
    std::array<char, 3> image;  // images of X, Y, Z
    std::array<int, 3> sign;
  };
  const std::vector<Case> cases{
      {GateKind::Hadamard, {'Z', 'Y', 'X'}, {1, -1, 1}},
      {GateKind::Rx90, {'X', 'Z', 'Y'}, {1, -1, 1}},
      {GateKind::UE, {'Z', 'X', 'Y'}, {1, 1, 1}},
  };
  const char in[3] = {'X', 'Y', 'Z'};
  for (const auto& c : cases) {
    const Matrix2 u = gate_matrix(c.g);
    const SiteClifford map = clifford_map(u);
    for (int k = 0; k < 3; ++k) {
      const oracle::M got = u.adjoint() * oracle::pauli(in[k]) * u;
      EXPECT_LT((got - c.sign[k] * oracle::pauli(c.image[k])).norm(), 1e-12)
          << to_string(c.g) << " " << in[k];
      EXPECT_EQ(to_char(map.image[k + 1]), c.image[k]);
      EXPECT_EQ(map.sign[k + 1], c.sign[k]);
    }
  }
}

TEST(Clifford, NonCliffordRejected) {
  Matrix2 t;
  t << 1, 0, 0, std::polar(1.0, M_PI / 4);
  EXPECT_THROW(clifford_map(t), DomainError);
}

SiteOperators random_cliffords(int n, std::mt19937_64& rng) {
  SiteOperators s = SiteOperators::identity(n);
  for (int q = 0; q < n; ++q) {
    for (int k = 0; k < 3; ++k) {
      const GateKind g = kGates[rng() % kGates.size()];
      SiteOperators one = SiteOperators::identity(n);
      one.ops[static_cast<std::size_t>(q)] = gate_matrix(g);
      s.then(one);
    }
  }
  return s;
}

TEST(Toggle, MatchesDenseConjugation) {
  std::mt19937_64 rng(91);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    PauliSum h(4);
    for (int k = 0; k < 8; ++k) {
      h.add(PauliString::from_label(oracle::random_label(4, rng)), nd(rng));
    }
    const SiteOperators s = random_cliffords(4, rng);
    const DenseMatrix u = site_operators_unitary(s);
    EXPECT_LT((to_dense(toggle(h, s)) - u.adjoint() * to_dense(h) * u).norm(), 1e-11);
  }
}

TEST(Toggle, ComposedFrameEqualsNestedToggles) {
  const PauliSum h = build_canonical(HamiltonianKind::Control, Lattice::chain(5), 1.0);
  const GateLayer first{GateKind::Rx90, Support::all()};
  const GateLayer second{GateKind::Hadamard, Support::even()};
  SiteOperators f = SiteOperators::from_layer(first, 5);
  f.then(SiteOperators::from_layer(second, 5));
  EXPECT_EQ(toggle(h, f), toggle(toggle(h, second), first));
}

TEST(Toggle, CyclicRotationThriceIsIdentityMap) {
  std::mt19937_64 rng(92);
  PauliSum h(5);
  for (int k = 0; k < 12; ++k) h.add(PauliString::from_label(oracle::random_label(5, rng)), 1.0 + k);
  const GateLayer ue{GateKind::UE};
  EXPECT_EQ(toggle(toggle(toggle(h, ue), ue), ue), h);
}

TEST(SiteOperators, ApplyMatchesDense) {
  std::mt19937_64 rng(93);
  const SiteOperators s = random_cliffords(5, rng);
  StateVector v = random_state(5, 4);
  const StateVector want = site_operators_unitary(s) * v;
  apply_site_operators(s, v);
  EXPECT_LT((v - want).norm(), 1e-12);
}

TEST(Support, ResolveAndDescribe) {
  EXPECT_EQ(Support::even().resolve(5), (std::vector<int>{1, 3}));
  EXPECT_EQ(Support::odd().resolve(5), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(Support::sites({3, 0}).describe(), "sites:1,4");
  EXPECT_THROW(Support::sites({7}).resolve(4), DomainError);
}

const DeviceParams& small_device() {
  static const DeviceParams p = DeviceParams::cr_chain(2, 300.0, 10.0, 0.5, 0.2);
  return p;
}

TEST(Frames, PipelineIsUnitaryAndGeneratorConsistent) {
  const DeviceParams& p = small_device();
  for (double t : {0.0, 0.2, 1.3}) {
    EXPECT_LT(unitarity_defect(frame_pipeline_unitary(p, t)), 1e-12);
    EXPECT_LT(frame_identity_residual(p, t), 1e-6);
  }
}

TEST(Frames, EffectiveEvolutionTracksLabFrame) {
  const DeviceParams& p = small_device();
  const FrameVerification v = verify_effective(p, 2.0 * M_PI);
  EXPECT_LE(v.distance_frame, 0.05);
  EXPECT_NEAR(v.omega_ratio, 0.05, 1e-15);
  EXPECT_NEAR(v.coupling_ratio, 0.02, 1e-15);
  EXPECT_LT(v.halving_change, 1e-6);
  EXPECT_EQ(v.effective, build_qf_effective_mixed(p));
}

TEST(Frames, QuadFrameApproximationDefectScalesQuadratically) {
  const double d1 = unitarity_defect(uqf_approx(DeviceParams::cr_chain(2, 300, 10, 1.0, 0.2), 0.4));
  const double d2 = unitarity_defect(uqf_approx(DeviceParams::cr_chain(2, 300, 10, 0.5, 0.2), 0.4));
  EXPECT_NEAR(d1 / d2, 4.0, 0.5);
  EXPECT_LE(d1, 0.02);
}

}  // namespace
}  // namespace crda
