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

#include <fstream>

#include <gtest/gtest.h>

#include "crda/config.hpp"
#include "crda/errors.hpp"

namespace crda {
namespace {

TEST(Config, KeyValueText) {
  const ConfigMap c = parse_config("# device\nn = 3\n delta=2.5 \n\ndrive = odd\n");
  EXPECT_EQ(c.at("n"), "3");
  EXPECT_EQ(c.at("delta"), "2.5");
  EXPECT_EQ(config_int(c, "n", 0), 3);
  EXPECT_DOUBLE_EQ(config_double(c, "delta", 0.0), 2.5);
  EXPECT_DOUBLE_EQ(config_double(c, "missing", 7.0), 7.0);
  EXPECT_EQ(config_string(c, "drive", ""), "odd");
}

TEST(Config, JsonWithArrays) {
  const ConfigMap c = parse_config(R"({"n": 3, "Omega": [0.1, 0.2, 0.0], "boundary": "open"})");
  EXPECT_EQ(config_int(c, "n", 0), 3);
  EXPECT_DOUBLE_EQ(config_double(c, "Omega.2", 0.0), 0.2);
  const DeviceParams p = device_from_config(c);
  EXPECT_DOUBLE_EQ(p.Omega[0], 0.1);
  EXPECT_DOUBLE_EQ(p.Omega[1], 0.2);
}

TEST(Config, MalformedInputThrows) {
  EXPECT_THROW(parse_config("n 3\n"), DomainError);
  EXPECT_THROW(parse_config("{\"n\": "), DomainError);
  const ConfigMap c{{"n", "three"}, {"x", "1.5"}};
  EXPECT_THROW(config_int(c, "n", 0), DomainError);
  EXPECT_THROW(config_int(c, "x", 0), DomainError);
}

TEST(Config, DeviceDefaultsAndOverrides) {
  const DeviceParams p = device_from_config({{"n", "3"}, {"g.2", "0.5"}, {"delta", "4"}});
  EXPECT_EQ(p.n, 3);
  EXPECT_DOUBLE_EQ(p.g[0], 0.02);
  EXPECT_DOUBLE_EQ(p.g[1], 0.5);
  EXPECT_DOUBLE_EQ(p.delta(0), 4.0);
  EXPECT_THROW(device_from_config({{"n", "3"}, {"g.3", "0.5"}}), DomainError);
}

TEST(Config, ModelParams) {
  const ModelParams m = model_from_config({{"J", "2"}, {"tau", "0.5"}, {"M", "4"}});
  EXPECT_DOUBLE_EQ(m.J, 2.0);
  EXPECT_DOUBLE_EQ(m.total_time(), 2.0);
}

TEST(Config, LoadsFile) {
  const std::string path = std::string(CRDA_TEST_TMPDIR) + "/config_test.cfg";
  {
    std::ofstream f(path);
    f << "n = 5\nJ = 0.5\n";
  }
  const ConfigMap c = load_config_file(path);
  EXPECT_EQ(config_int(c, "n", 0), 5);
  EXPECT_THROW(load_config_file(path + ".missing"), DomainError);
}

TEST(Config, JsonEcho) {
  const auto j = to_json(Lattice::square(4, 2));
  EXPECT_EQ(j.at("nx"), 4);
  EXPECT_EQ(j.at("boundary"), "periodic");
}

}  // namespace
}  // namespace crda
