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

#include "crda/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "crda/errors.hpp"

namespace crda {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return csv_escape(v.dump());
}

}  // namespace

std::string to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat output_format_from_string(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw DomainError("unknown output format '" + std::string(s) +
                    "' (expected json or csv)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<nlohmann::json> row) {
  if (row.size() != columns.size()) {
    throw DomainError("table row has " + std::to_string(row.size()) +
                      " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << csv_escape(t.columns[c]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << csv_cell(row[c]);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  return rows;
}

Table error_table(const ErrorReport& r) {
  Table t;
  t.columns = {"name", "value", "analytic", "bound", "pass"};
  for (const auto& e : r.entries) {
    t.add_row({e.name, e.value,
               e.analytic ? nlohmann::json(*e.analytic) : nlohmann::json(nullptr),
               e.bound ? nlohmann::json(*e.bound) : nlohmann::json(nullptr),
               e.pass()});
  }
  return t;
}

std::string to_csv(const ErrorReport& r) { return to_csv(error_table(r)); }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace crda
