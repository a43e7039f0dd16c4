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

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crda/config.hpp"
#include "crda/report.hpp"

namespace crda::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kResource = 3,
  kCompute = 4,
};

/// Result of one subcommand evaluation: a JSON document and the same data
/// as a long-format table.
struct Output {
  nlohmann::json json;
  Table table;
};

/// Evaluates `command` ("hamiltonian", "verify-frames", "simulate",
/// "errors", "compile") against a fully resolved configuration. Pure and
/// deterministic for a given configuration.
Output execute(const std::string& command, const ConfigMap& config);

/// One sweep axis "key=start:stop:points" (linear, endpoints included).
struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

SweepAxis parse_sweep(const std::string& spec);

/// Runs `command` at every point of the cartesian product of the axes,
/// using up to `threads` workers; rows are emitted in axis order.
Output execute_sweep(const std::string& command, const ConfigMap& config,
                     const std::vector<SweepAxis>& axes, int threads);

/// Full command-line entry point; writes results to `out` (or the --out
/// file) and machine-readable errors to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crda::cli
