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

#ifndef QPRIV_ERROR_HPP_
#define QPRIV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpriv {

enum class ErrorCode {
  kNonHermitian,
  kNotPositive,
  kNotNormalized,
  kNotTracePreserving,
  kNotAnEffect,
  kDimensionMismatch,
  kDimensionBudgetExceeded,
  kInvalidGamma,
  kGammaOutOfRange,
  kInvalidProbability,
  kInvalidRank,
  kInvalidEta,
  kInvalidParams,
  kInvalidAlpha,
  kAlphaTooLarge,
  kDegenerateStates,
  kDegeneratePair,
  kUnbounded,
  kSingularSigma,
  kNoValidPairs,
  kQuadratureNotConverged,
  kParseError,
};

std::string_view ToString(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qpriv

#endif  // QPRIV_ERROR_HPP_
