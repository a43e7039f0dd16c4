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

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "crda/device.hpp"

namespace crda {

/**
 * Flat configuration: keys such as "n", "boundary", "J", "tau", "M" and
 * 1-based indexed device entries "omega_q.k", "omega.k", "Omega.k", "phi.k",
 * "g.k". Uniform shortcuts "omega_base", "delta", "Omega", "g", "phi" and
 * "drive" build a cross-resonance chain that indexed keys then override.
 */
using ConfigMap = std::map<std::string, std::string>;

/// Parses "key = value" lines (# comments, blank lines ignored) or, when the
/// text starts with '{', a flat JSON object whose arrays expand to indexed
/// keys. Throws DomainError on malformed input.
ConfigMap parse_config(std::string_view text);
ConfigMap load_config_file(const std::string& path);

double config_double(const ConfigMap& c, const std::string& key, double fallback);
int config_int(const ConfigMap& c, const std::string& key, int fallback);
std::string config_string(const ConfigMap& c, const std::string& key,
                          const std::string& fallback);

DeviceParams device_from_config(const ConfigMap& c);
ModelParams model_from_config(const ConfigMap& c);

nlohmann::json to_json(const DeviceParams& p);
nlohmann::json to_json(const ModelParams& m);
nlohmann::json to_json(const Lattice& l);

}  // namespace crda
