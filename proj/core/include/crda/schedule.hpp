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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "crda/device.hpp"
#include "crda/frames.hpp"
#include "crda/hamiltonians.hpp"
#include "crda/linalg.hpp"

namespace crda {

enum class ModelKind { Ising1D, XY1D, XY2D, Heisenberg1D };

std::string to_string(ModelKind m);
ModelKind model_kind_from_string(std::string_view s);

struct TargetModel {
  ModelKind kind = ModelKind::Ising1D;
  Lattice lattice;
  double J = 1.0;
  double tau = 0.1;
  int M = 1;

  void validate() const;
};

/// Analog evolution for `duration` under the static effective Hamiltonian
/// `analog`, or under `realistic` (absolute-time generator) when present.
struct AnalogSegment {
  double duration = 0.0;
  DriveConfig drive;
  PauliSum analog;
  std::string label;
  std::optional<TimeDependentHamiltonian> realistic;
};

/// Product of consecutive gate layers collapsed into one per-site operator.
struct FusedLayer {
  SiteOperators ops;
  std::vector<GateLayer> parts;
};

/// Instantaneous control/target role change; no unitary action.
struct DriveSwitch {
  DriveMode from = DriveMode::OddOnly;
  DriveMode to = DriveMode::EvenOnly;
};

using Step = std::variant<GateLayer, FusedLayer, AnalogSegment, DriveSwitch>;

struct Schedule {
  int nqubits = 0;
  TargetModel model;
  std::vector<Step> block;
  int repetitions = 1;
  bool fused = false;
  bool realistic = false;

  int gate_layer_count() const;
  int analog_segment_count() const;
  double analog_time_per_block() const;
};

struct CompileOptions {
  bool fuse = false;
  /// Unroll all M blocks before fusing so layers merge across block edges.
  bool fuse_across_blocks = false;
  /// Replace each analog segment by the corresponding original (pre-RWA)
  /// Hamiltonian built from `device`; the model J is then derived from the
  /// device. Not available for the 2D model.
  bool realistic = false;
  std::optional<DeviceParams> device;
};

/// Transcribes the digital-analog protocol of a target model into a block
/// schedule (time order, first step applied first).
Schedule compile(const TargetModel& m, const CompileOptions& opts = {});

/// Merges runs of adjacent gate layers; identity products are dropped.
Schedule fuse(const Schedule& s);

/// Hamiltonian the block is designed to reproduce.
PauliSum target_hamiltonian(const TargetModel& m);

/// Effective Hamiltonian of each analog segment, F^dagger H F with F the
/// product of all gate layers preceding the segment within the block.
std::vector<PauliSum> segment_effective_hamiltonians(const Schedule& s);

/// True when the product of all gate layers in a block is the identity up
/// to a global phase on every site.
bool block_frame_closes(const Schedule& s);

/// Dense unitary of one block (block index selects the time offset used by
/// realistic segments) and of the whole M-block schedule.
DenseMatrix block_unitary(const Schedule& s, int block_index = 0,
                          int dense_limit = kDefaultDenseLimit);
DenseMatrix schedule_unitary(const Schedule& s,
                             int dense_limit = kDefaultDenseLimit);

struct Observable {
  std::string name;
  PauliSum op;
};

/// Observables named on the command line: "zk" (every <z_k>), "sz-total"
/// and "pauli:<pattern>".
std::vector<Observable> parse_observables(const std::vector<std::string>& specs,
                                          int nqubits);

struct SimulationRow {
  int block = 0;
  double time = 0.0;
  double norm = 1.0;
  std::vector<double> values;
};

/// Applies the schedule block by block to `psi0` without forming dense
/// propagators beyond small cached exponentials, and records observable
/// expectations after each block.
std::vector<SimulationRow> simulate(const Schedule& s, const StateVector& psi0,
                                    const std::vector<Observable>& observables);

/// Applies one block to a state (matrix-free).
StateVector apply_block(const Schedule& s, const StateVector& psi,
                        int block_index = 0);

struct BlockErrorOptions {
  int dense_limit = 10;
  int samples = 6;
  std::uint64_t seed = 0x0b10c4e5ULL;
};

/// Phase-insensitive normalized Frobenius distance between one compiled
/// block and exp(-i H_target tau). Dense up to `dense_limit`; beyond that an
/// unbiased random-state estimate of the same quantity.
double block_error(const TargetModel& m, double tau,
                   const BlockErrorOptions& opts = {});

nlohmann::json to_json(const Schedule& s);

}  // namespace crda
