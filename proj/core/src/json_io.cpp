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

#include "qpriv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpriv/error.hpp"

namespace qpriv {
namespace {

using Json = nlohmann::json;

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

int PositiveInt(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string("missing integer field '") + key + "'");
  }
  const long long v = obj[key].get<long long>();
  if (v < 1 || v > 1 << 16) {
    throw Error(ErrorCode::kParseError, std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(v);
}

Matrix EntriesToMatrix(const Json& entries, int rows, int cols) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::kParseError, "expected " + std::to_string(rows * cols) + " entries");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Json& e = entries[static_cast<std::size_t>(i) * cols + j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorCode::kParseError, "entry must be [re, im]");
      }
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json MatrixEntries(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return entries;
}

}  // namespace

Matrix ParseMatrix(const std::string& text) {
  const Json j = Parse(text);
  const int d = PositiveInt(j, "dim");
  if (!j.contains("entries")) throw Error(ErrorCode::kParseError, "missing 'entries'");
  return EntriesToMatrix(j["entries"], d, d);
}

DensityMatrix ParseDensityMatrix(const std::string& text) {
  return DensityMatrix::FromMatrix(ParseMatrix(text));
}

KrausChannel ParseChannel(const std::string& text) {
  const Json j = Parse(text);
  const int din = PositiveInt(j, "dim_in");
  const int dout = PositiveInt(j, "dim_out");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw Error(ErrorCode::kParseError, "missing or empty 'kraus'");
  }
  std::vector<Matrix> kraus;
  for (const Json& k : j["kraus"]) {
    const Json& entries = k.is_object() ? (k.contains("entries") ? k["entries"] : Json()) : k;
    kraus.push_back(EntriesToMatrix(entries, dout, din));
  }
  return KrausChannel(din, dout, std::move(kraus));
}

std::string MatrixToJson(const Matrix& m) {
  Json j;
  j["dim"] = m.rows();
  j["entries"] = MatrixEntries(m);
  return j.dump() + "\n";
}

std::string ChannelToJson(const KrausChannel& channel) {
  Json j;
  j["dim_in"] = channel.dim_in();
  j["dim_out"] = channel.dim_out();
  Json kraus = Json::array();
  for (const Matrix& k : channel.kraus()) kraus.push_back({{"entries", MatrixEntries(k)}});
  j["kraus"] = std::move(kraus);
  return j.dump() + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kParseError, "write failed for " + path);
}

Matrix ReadMatrix(const std::string& path) { return ParseMatrix(ReadTextFile(path)); }

DensityMatrix ReadDensityMatrix(const std::string& path) {
  return ParseDensityMatrix(ReadTextFile(path));
}

KrausChannel ReadChannel(const std::string& path) { return ParseChannel(ReadTextFile(path)); }

}  // namespace qpriv
