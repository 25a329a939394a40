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

// JSON file formats.
//
//   matrix:  {"dim": d, "entries": [[re, im], ...]}     row-major, d*d pairs
//   channel: {"dim_in": m, "dim_out": n, "kraus": [K, ...]}
//
// Each Kraus operator is {"entries": [...]} or a bare entries array, holding
// dim_out * dim_in pairs in row-major order.

#ifndef QPRIV_JSON_IO_HPP_
#define QPRIV_JSON_IO_HPP_

#include <string>

#include "qpriv/quantum_core.hpp"

namespace qpriv {

// Malformed text throws ParseError; a well-formed matrix that is not a
// state throws the corresponding validation error.
Matrix ParseMatrix(const std::string& text);
DensityMatrix ParseDensityMatrix(const std::string& text);
KrausChannel ParseChannel(const std::string& text);

std::string MatrixToJson(const Matrix& m);
std::string ChannelToJson(const KrausChannel& channel);

// Whole-file helpers; unreadable files throw ParseError.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

Matrix ReadMatrix(const std::string& path);
DensityMatrix ReadDensityMatrix(const std::string& path);
KrausChannel ReadChannel(const std::string& path);

}  // namespace qpriv

#endif  // QPRIV_JSON_IO_HPP_
