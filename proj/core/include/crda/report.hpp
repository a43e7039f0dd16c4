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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crda/error_analysis.hpp"

namespace crda {

enum class OutputFormat { Json, Csv };

std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(std::string_view s);

/// Shortest decimal text that round-trips the double; "nan"/"inf" for
/// non-finite values. Locale independent.
std::string format_number(double v);

/// Column-oriented table rendered as long-format CSV or as a JSON array of
/// row objects. Cells are JSON scalars.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void add_row(std::vector<nlohmann::json> row);
};

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

/// CSV with columns name,value,analytic,bound,pass.
Table error_table(const ErrorReport& r);
std::string to_csv(const ErrorReport& r);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string dump(const nlohmann::json& j);

}  // namespace crda
