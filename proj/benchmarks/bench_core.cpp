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

#include <benchmark/benchmark.h>

#include "crda/error_analysis.hpp"
#include "crda/frames.hpp"
#include "crda/hamiltonians.hpp"
#include "crda/krylov.hpp"
#include "crda/schedule.hpp"

namespace {

using namespace crda;

void BM_CommutatorXY2D(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const Lattice lat = Lattice::square(n, n);
  const PauliSum a = build_canonical(HamiltonianKind::H_I, lat, 1.0);
  const PauliSum b = build_canonical(HamiltonianKind::H_II, lat, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_CommutatorXY2D)->Arg(4)->Arg(6)->Arg(8);

void BM_ToggleHadamard(benchmark::State& state) {
  const Lattice lat = Lattice::chain(static_cast<int>(state.range(0)));
  const PauliSum h = build_canonical(HamiltonianKind::H_Heis, lat, 1.0);
  const GateLayer layer{GateKind::Hadamard, Support::even()};
  for (auto _ : state) benchmark::DoNotOptimize(toggle(h, layer));
}
BENCHMARK(BM_ToggleHadamard)->Arg(16)->Arg(64);

void BM_ApplyPauliSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum h = build_canonical(HamiltonianKind::H_Heis, Lattice::chain(n), 1.0);
  const StateVector v = random_state(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply(h, v));
}
BENCHMARK(BM_ApplyPauliSum)->Arg(10)->Arg(14)->Arg(18);

void BM_SpectralNormMatrixFree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum c = trotter_commutator_sum(TrotterModel::Heis_DA, Lattice::chain(n), 1.0);
  SpectralNormOptions opts;
  opts.force_matrix_free = true;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm(c, opts));
}
BENCHMARK(BM_SpectralNormMatrixFree)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SimulateHeisenbergBlock(benchmark::State& state) {
  TargetModel m;
  m.kind = ModelKind::Heisenberg1D;
  m.lattice = Lattice::chain(static_cast<int>(state.range(0)));
  m.tau = 0.1;
  const Schedule s = compile(m);
  const StateVector psi = random_state(m.lattice.size(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_block(s, psi));
}
BENCHMARK(BM_SimulateHeisenbergBlock)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DysonQuadrature(benchmark::State& state) {
  const DeviceParams p = DeviceParams::cr_chain(6, 300.0, 10.0, 1e-3, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(dyson_norm_numeric(p, 0.5));
}
BENCHMARK(BM_DysonQuadrature);

}  // namespace

BENCHMARK_MAIN();
