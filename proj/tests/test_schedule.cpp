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

#include <gtest/gtest.h>

#include "crda/errors.hpp"
#include "crda/krylov.hpp"
#include "crda/schedule.hpp"

namespace crda {
namespace {

using HK = HamiltonianKind;

TargetModel model(ModelKind k, int n, double tau = 0.3, int M = 1, double J = 1.0) {
  TargetModel m;
  m.kind = k;
  m.lattice = k == ModelKind::XY2D ? Lattice::square(n, n) : Lattice::chain(n);
  m.J = J;
  m.tau = tau;
  m.M = M;
  return m;
}

TEST(ModelKind, NamesRoundTrip) {
  for (auto k : {ModelKind::Ising1D, ModelKind::XY1D, ModelKind::XY2D, ModelKind::Heisenberg1D}) {
    EXPECT_EQ(model_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(model_kind_from_string("potts"), DomainError);
}

TEST(Compile, ValidatesModel) {
  TargetModel m = model(ModelKind::Ising1D, 4);
  m.M = 0;
  EXPECT_THROW(compile(m), DomainError);
  m = model(ModelKind::XY2D, 4);
  m.lattice = Lattice::chain(4);
  EXPECT_THROW(compile(m), DomainError);
}

TEST(Compile, BlockShapes) {
  const Schedule ising = compile(model(ModelKind::Ising1D, 4));
  EXPECT_EQ(ising.analog_segment_count(), 2);
  EXPECT_EQ(ising.gate_layer_count(), 4);
  EXPECT_EQ(ising.block.size(), 7U);  // includes the drive switch
  const Schedule xy = compile(model(ModelKind::XY1D, 4));
  EXPECT_EQ(xy.analog_segment_count(), 2);
  EXPECT_EQ(xy.gate_layer_count(), 8);
  const Schedule heis = compile(model(ModelKind::Heisenberg1D, 4));
  EXPECT_EQ(heis.analog_segment_count(), 3);
  EXPECT_EQ(heis.gate_layer_count(), 9);
  EXPECT_DOUBLE_EQ(heis.analog_time_per_block(), 0.9);
}

// Each analog segment seen through the preceding gates is the designed
// family, and the families sum to the target.
TEST(Compile, SegmentsRealizeDesignedFamilies) {
  struct Case {
    ModelKind kind;
    int n;
    std::vector<HK> families;
  };
  const std::vector<Case> cases{
      {ModelKind::Ising1D, 5, {HK::H1, HK::H2}},
      {ModelKind::XY1D, 5, {HK::H_EvenPrime, HK::H_OddPrime}},
      {ModelKind::Heisenberg1D, 5, {HK::H_E, HK::H_E_Prime, HK::H_E_DoublePrime}},
      {ModelKind::XY2D, 4, {HK::H_I, HK::H_II}},
  };
  for (const auto& c : cases) {
    const TargetModel m = model(c.kind, c.n, 0.2, 1, 0.7);
    const Schedule s = compile(m);
    const auto eff = segment_effective_hamiltonians(s);
    ASSERT_EQ(eff.size(), c.families.size());
    PauliSum sum(s.nqubits);
    for (std::size_t k = 0; k < eff.size(); ++k) {
      EXPECT_EQ(eff[k], build_canonical(c.families[k], m.lattice, 0.7)) << to_string(c.kind);
      sum += eff[k];
    }
    EXPECT_EQ(sum, target_hamiltonian(m));
    EXPECT_TRUE(block_frame_closes(s)) << to_string(c.kind);
  }
}

TEST(Exactness, CommutingSplitsAreExact) {
  for (auto k : {ModelKind::Ising1D, ModelKind::XY1D}) {
    for (int n : {2, 3, 6}) {
      for (double tau : {0.1, 1.0, 5.0}) {
        EXPECT_LE(block_error(model(k, n), tau), 1e-10) << to_string(k) << n << " " << tau;
      }
    }
  }
}

TEST(Exactness, HeisenbergErrorIsSecondOrder) {
  const TargetModel m = model(ModelKind::Heisenberg1D, 4);
  const double e1 = block_error(m, 0.02), e2 = block_error(m, 0.01);
  EXPECT_NEAR(e1 / e2, 4.0, 0.1);
}

TEST(Fusion, PreservesUnitaryAndDropsLayers) {
  for (auto k : {ModelKind::Ising1D, ModelKind::XY1D, ModelKind::Heisenberg1D}) {
    const TargetModel m = model(k, 4, 0.4, 3);
    const Schedule plain = compile(m);
    CompileOptions o;
    o.fuse = true;
    const Schedule fused = compile(m, o);
    EXPECT_TRUE(fused.fused);
    EXPECT_LT(fused.gate_layer_count(), plain.gate_layer_count()) << to_string(k);
    EXPECT_LT(phase_insensitive_distance(schedule_unitary(plain), schedule_unitary(fused)),
              1e-12);
    o.fuse_across_blocks = true;
    const Schedule unrolled = compile(m, o);
    EXPECT_EQ(unrolled.repetitions, 1);
    EXPECT_LT(phase_insensitive_distance(schedule_unitary(plain), schedule_unitary(unrolled)),
              1e-12);
  }
}

TEST(Fusion, IsingLayersCancelAroundDriveSwitch) {
  CompileOptions o;
  o.fuse = true;
  const Schedule s = compile(model(ModelKind::Ising1D, 4), o);
  // Had.Had around the switch is the identity and disappears.
  EXPECT_EQ(s.gate_layer_count(), 2);
}

TEST(Simulate, RowsNormsAndDenseAgreement) {
  const TargetModel m = model(ModelKind::XY1D, 5, 0.25, 4);
  const Schedule s = compile(m);
  const StateVector psi = random_state(5, 17);
  const auto obs = parse_observables({"zk", "sz-total"}, 5);
  ASSERT_EQ(obs.size(), 6U);
  const auto rows = simulate(s, psi, obs);
  ASSERT_EQ(rows.size(), 4U);
  for (const auto& r : rows) EXPECT_NEAR(r.norm, 1.0, 1e-10);
  EXPECT_DOUBLE_EQ(rows.back().time, 1.0);
  const StateVector want = schedule_unitary(s) * psi;
  EXPECT_NEAR(rows.back().values.back(), expectation(obs.back().op, want).real(), 1e-10);
}

TEST(Simulate, ConservesTotalMagnetizationForXY) {
  const Schedule s = compile(model(ModelKind::XY1D, 6, 0.3, 5));
  const auto obs = parse_observables({"sz-total"}, 6);
  const auto rows = simulate(s, basis_state(6, 0b000101), obs);
  for (const auto& r : rows) EXPECT_NEAR(r.values[0], 1.0, 1e-10);
}

TEST(Simulate, ObservableParsing) {
  EXPECT_EQ(parse_observables({"pauli:XZI"}, 3)[0].name, "XZI");
  EXPECT_THROW(parse_observables({"pauli:XZ"}, 3), DomainError);
  EXPECT_THROW(parse_observables({"energy"}, 3), DomainError);
}

TEST(BlockError, RandomEstimateTracksDenseValue) {
  const TargetModel m = model(ModelKind::Heisenberg1D, 7);
  const double dense = block_error(m, 0.2);
  BlockErrorOptions o;
  o.dense_limit = 4;
  o.samples = 8;
  const double estimate = block_error(m, 0.2, o);
  EXPECT_NEAR(estimate / dense, 1.0, 0.2);
  EXPECT_EQ(estimate, block_error(m, 0.2, o));
}

TEST(Realistic, BuildsOriginalSegmentsFromDevice) {
  const DeviceParams d = DeviceParams::cr_chain(3, 300, 10, 0.5, 0.2);
  CompileOptions o;
  o.realistic = true;
  o.device = d;
  const Schedule s = compile(model(ModelKind::XY1D, 3, 0.2), o);
  EXPECT_TRUE(s.realistic);
  EXPECT_DOUBLE_EQ(s.model.J, uniform_drive(d).coupling());
  const DenseMatrix u = block_unitary(s);
  EXPECT_LT(unitarity_defect(u), 1e-8);
  // The original dynamics stay close to the target for weak driving.
  const DenseMatrix target = expm_hermitian(target_hamiltonian(s.model), 0.2);
  EXPECT_LT(phase_insensitive_distance(u, target), 0.05);

  EXPECT_THROW(compile(model(ModelKind::XY2D, 4), o), DomainError);
  o.device.reset();
  EXPECT_THROW(compile(model(ModelKind::XY1D, 3), o), DomainError);
}

TEST(Realistic, IsingUsesPositiveCoupling) {
  const DeviceParams d = DeviceParams::cr_chain(4, 300, 10, 0.5, 0.2);
  CompileOptions o;
  o.realistic = true;
  o.device = d;
  const Schedule s = compile(model(ModelKind::Ising1D, 4, 0.2), o);
  EXPECT_DOUBLE_EQ(s.model.J, -uniform_drive(d).coupling());
  const DenseMatrix target = expm_hermitian(target_hamiltonian(s.model), 0.2);
  EXPECT_LT(phase_insensitive_distance(block_unitary(s), target), 0.05);
}

TEST(Schedule, JsonExport) {
  CompileOptions o;
  o.fuse = true;
  const auto j = to_json(compile(model(ModelKind::Heisenberg1D, 4), o));
  EXPECT_EQ(j.at("model"), "heisenberg");
  EXPECT_EQ(j.at("analog_segments"), 3);
  EXPECT_TRUE(j.at("frame_closes").get<bool>());
  EXPECT_EQ(j.at("block").at(0).at("type"), "gate");
}

}  // namespace
}  // namespace crda
