// Copyright 2026 The qpriv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpriv/error.hpp"
#include "qpriv/experiments.hpp"
#include "test_support.hpp"

namespace qpriv {
namespace {

RunConfig Small() {
  RunConfig c;
  c.trials = 40;
  c.seed = 3;
  return c;
}

TEST(RunConfig, Parse) {
  const RunConfig c = ParseRunConfig(
      R"({"seed": 9, "trials": 12, "tolerances": {"scan": 1e-5}, "format": "json"})");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.trials, 12);
  EXPECT_EQ(c.format, "json");
  EXPECT_EQ(c.Tolerance("scan"), 1e-5);
  EXPECT_EQ(c.Tolerance("denom"), 1e-8);
  EXPECT_THROW(ParseRunConfig(R"({"trials": 0})"), Error);
  EXPECT_THROW(ParseRunConfig(R"({"format": "xml"})"), Error);
  EXPECT_THROW(ParseRunConfig("[1,"), Error);
}

TEST(Suites, ContractionTablesAndDeterminism) {
  const SuiteResult a = RunContractionSuite(Small());
  const SuiteResult b = RunContractionSuite(Small());
  ASSERT_FALSE(a.tables.empty());
  EXPECT_EQ(a.violations, 0);
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    EXPECT_EQ(ToCsv(a.tables[i]), ToCsv(b.tables[i]));
    EXPECT_EQ(ToJson(a.tables[i]), ToJson(b.tables[i]));
  }
}

TEST(Suites, ForcedViolation) {
  RunConfig c = Small();
  c.tolerances["scan"] = -1.0;
  EXPECT_GT(RunContractionSuite(c).violations, 0);
}

TEST(Suites, SampleComplexitySchema) {
  const SuiteResult r = RunSampleComplexitySuite(Small());
  ASSERT_EQ(r.tables.size(), 1u);
  const std::vector<std::string> expected{"epsilon", "delta", "alpha", "p",      "T",     "dB2",
                                          "sc_exact", "sc_lower", "sc_upper", "method", "seed"};
  EXPECT_EQ(r.tables[0].columns, expected);
  EXPECT_EQ(r.violations, 0);
  const std::string csv = ToCsv(r.tables[0]);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "epsilon,delta,alpha,p,T,dB2,sc_exact,sc_lower,sc_upper,method,seed");
}

TEST(Suites, AllContainsEveryTable) {
  const SuiteResult all = RunSuite("all", Small());
  std::size_t expected = RunContractionSuite(Small()).tables.size() +
                         RunSampleComplexitySuite(Small()).tables.size() +
                         RunApplicationsSuite(Small()).tables.size();
  EXPECT_EQ(all.tables.size(), expected);
  EXPECT_EQ(all.violations, 0);
  EXPECT_THROW(RunSuite("bogus", Small()), Error);
}

}  // namespace
}  // namespace qpriv
