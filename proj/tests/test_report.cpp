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

#include <cmath>

#include "crda/error_analysis.hpp"
#include "crda/errors.hpp"
#include "crda/report.hpp"

namespace crda {
namespace {

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5e-17), "-2.5e-17");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  for (double v : {1.0 / 3.0, 0.353553390593, 6.02214076e23}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(OutputFormat, Names) {
  EXPECT_EQ(output_format_from_string("csv"), OutputFormat::Csv);
  EXPECT_EQ(to_string(OutputFormat::Json), "json");
  EXPECT_THROW(output_format_from_string("xml"), DomainError);
}

TEST(Table, CsvEscapingAndNulls) {
  Table t;
  t.columns = {"a", "b", "c"};
  t.add_row({1, "x,y", nullptr});
  t.add_row({0.5, "say \"hi\"", true});
  EXPECT_EQ(to_csv(t), "a,b,c\n1,\"x,y\",\n0.5,\"say \"\"hi\"\"\",true\n");
  EXPECT_THROW(t.add_row({1}), DomainError);
}

TEST(Table, JsonRows) {
  Table t;
  t.columns = {"k", "v"};
  t.add_row({"a", 2});
  const auto j = to_json(t);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0].at("k"), "a");
  EXPECT_EQ(j[0].at("v"), 2);
}

TEST(ErrorTable, Columns) {
  ErrorReport r;
  r.add({.name = "x", .value = 1.0, .analytic = 1.0, .tolerance = 0.1});
  r.add({.name = "y", .value = 3.0, .bound = 2.0});
  EXPECT_EQ(to_csv(r), "name,value,analytic,bound,pass\nx,1,1,,true\ny,3,,2,false\n");
}

TEST(Dump, SortedAndTerminated) {
  const std::string s = dump(nlohmann::json{{"b", 1}, {"a", 2}});
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
  EXPECT_EQ(s.back(), '\n');
}

}  // namespace
}  // namespace crda
