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

// Experiment suites behind `qpriv reproduce`: each produces tables and a
// count of bound violations. Output is a deterministic function of the
// configuration.

#ifndef QPRIV_EXPERIMENTS_HPP_
#define QPRIV_EXPERIMENTS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qpriv {

struct RunConfig {
  std::uint64_t seed = 7;
  int trials = 10000;
  // Keys: scan, cert, denom.
  std::map<std::string, double> tolerances;
  std::string output_path = ".";
  std::string format = "csv";

  double Tolerance(const std::string& key) const;
  // trials >= 1, format in {csv, json}, known tolerance keys.
  void Validate() const;
};

// Reads a JSON object with any of the RunConfig fields.
RunConfig ParseRunConfig(const std::string& text);

using Cell = std::variant<std::monostate, std::string, double, long long, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct SuiteResult {
  std::vector<Table> tables;
  int violations = 0;
};

SuiteResult RunContractionSuite(const RunConfig& config);
SuiteResult RunSampleComplexitySuite(const RunConfig& config);
SuiteResult RunApplicationsSuite(const RunConfig& config);

// Accepts contraction, sample_complexity, applications, all.
SuiteResult RunSuite(const std::string& suite, const RunConfig& config);

std::string ToCsv(const Table& table);
std::string ToJson(const Table& table);

}  // namespace qpriv

#endif  // QPRIV_EXPERIMENTS_HPP_
