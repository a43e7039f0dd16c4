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

#include "crda/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "crda/errors.hpp"

namespace crda {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string scalar_to_string(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw DomainError("config key '" + key + "' must be a scalar or array");
}

ConfigMap parse_json_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid JSON config: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("JSON config must be an object");
  ConfigMap out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string k = key + "." + std::to_string(i + 1);
        out[k] = scalar_to_string(value[i], k);
      }
    } else {
      out[key] = scalar_to_string(value, key);
    }
  }
  return out;
}

ConfigMap parse_kv_config(std::string_view text) {
  ConfigMap out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty()) {
      throw DomainError("config line " + std::to_string(lineno) + ": empty key");
    }
    out[key] = value;
  }
  return out;
}

void apply_indexed(const ConfigMap& c, const std::string& name,
                   std::vector<double>& target) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    const std::string key = name + "." + std::to_string(k + 1);
    if (c.count(key) != 0) target[k] = config_double(c, key, target[k]);
  }
  // Reject indices beyond the array so typos do not pass silently.
  const std::string prefix = name + ".";
  for (auto it = c.lower_bound(prefix);
       it != c.end() && it->first.compare(0, prefix.size(), prefix) == 0; ++it) {
    const std::string idx = it->first.substr(prefix.size());
    char* end = nullptr;
    const long k = std::strtol(idx.c_str(), &end, 10);
    if (end == idx.c_str() || *end != '\0' || k < 1 ||
        static_cast<std::size_t>(k) > target.size()) {
      throw DomainError("config key '" + it->first + "' is out of range");
    }
  }
}

}  // namespace

ConfigMap parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json_config(text);
  }
  return parse_kv_config(text);
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

double config_double(const ConfigMap& c, const std::string& key,
                     double fallback) {
  const auto it = c.find(key);
  if (it == c.end()) return fallback;
  const char* s = it->second.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw DomainError("config key '" + key + "' is not a finite number: '" +
                      it->second + "'");
  }
  return v;
}

int config_int(const ConfigMap& c, const std::string& key, int fallback) {
  const auto it = c.find(key);
  if (it == c.end()) return fallback;
  const char* s = it->second.c_str();
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || errno == ERANGE || v < -1000000000L ||
      v > 1000000000L) {
    throw DomainError("config key '" + key + "' is not an integer: '" +
                      it->second + "'");
  }
  return static_cast<int>(v);
}

std::string config_string(const ConfigMap& c, const std::string& key,
                          const std::string& fallback) {
  const auto it = c.find(key);
  return it == c.end() ? fallback : it->second;
}

DeviceParams device_from_config(const ConfigMap& c) {
  const int n = config_int(c, "n", 2);
  if (n < 1) throw DomainError("n must be positive");
  if (n > 64) throw ResourceError("n exceeds 64 qubits");
  DeviceParams p = DeviceParams::cr_chain(
      n, config_double(c, "omega_base", 300.0), config_double(c, "delta", 1.0),
      config_double(c, "Omega", 0.05), config_double(c, "g", 0.02),
      config_double(c, "phi", 0.0),
      drive_mode_from_string(config_string(c, "drive", "all")),
      boundary_from_string(config_string(c, "boundary", "open")));
  apply_indexed(c, "omega_q", p.omega_q);
  apply_indexed(c, "omega", p.omega);
  apply_indexed(c, "Omega", p.Omega);
  apply_indexed(c, "phi", p.phi);
  apply_indexed(c, "g", p.g);
  p.validate();
  return p;
}

ModelParams model_from_config(const ConfigMap& c) {
  ModelParams m;
  m.J = config_double(c, "J", m.J);
  m.tau = config_double(c, "tau", m.tau);
  m.M = config_int(c, "M", m.M);
  m.validate();
  return m;
}

nlohmann::json to_json(const DeviceParams& p) {
  return {{"n", p.n},
          {"boundary", to_string(p.boundary)},
          {"omega_q", p.omega_q},
          {"omega", p.omega},
          {"Omega", p.Omega},
          {"phi", p.phi},
          {"g", p.g}};
}

nlohmann::json to_json(const ModelParams& m) {
  return {{"J", m.J}, {"tau", m.tau}, {"M", m.M}};
}

nlohmann::json to_json(const Lattice& l) {
  return {{"dim", l.dim},
          {"nx", l.nx},
          {"ny", l.ny},
          {"boundary", to_string(l.boundary)}};
}

}  // namespace crda
