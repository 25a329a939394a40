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

// Construction, certification and conversion of private channels.
//
// A channel A is (epsilon, delta)-private when
//   sup_{rho, sigma} E_{e^epsilon}(A(rho) || A(sigma)) <= delta,
// and the supremum is attained on orthogonal pure input pairs.

#ifndef QPRIV_PRIVACY_HPP_
#define QPRIV_PRIVACY_HPP_

#include <cstdint>

#include "qpriv/quantum_core.hpp"

namespace qpriv {

inline constexpr double kTolCert = 1e-7;
inline constexpr double kEpsilonCap = 50.0;

struct PrivacyParams {
  double epsilon = 0.0;
  double delta = 0.0;

  // Throws InvalidParams unless epsilon >= 0 and delta in [0, 1].
  void Validate() const;
};

struct SearchBudget {
  int restarts = 64;
  int polish_steps = 200;
  std::uint64_t seed = 0;
};

struct CertificationResult {
  bool certified = false;
  // Largest E_{e^epsilon} found; a lower bound on the true supremum.
  double worst_value = 0.0;
  Vector witness_first;
  Vector witness_second;
  int iterations = 0;
};

// Dep_2^{p} o M with p = 2 / (e^epsilon + 1).
KrausChannel BuildQldpMechanism(const Matrix& effect, double epsilon);

// Dep_2^{p} o M with p = 2 (1 - delta) / (e^epsilon + 1).
KrausChannel BuildEpsDeltaMechanism(const Matrix& effect, const PrivacyParams& params);

// Multi-start local search over orthonormal input pairs. Rejections are
// sound; acceptance is heuristic.
CertificationResult Certify(const KrausChannel& channel, const PrivacyParams& params,
                            const SearchBudget& budget = {});

// Largest D_max(A(phi1) || A(phi2)) found over orthonormal pairs; +infinity
// once it exceeds kEpsilonCap.
double EstimateEpsilon(const KrausChannel& channel, const SearchBudget& budget = {});

struct PurifiedChannel {
  KrausChannel channel;
  double epsilon = 0.0;
};

// Dep_{d}^{eta} o A with d = channel.dim_out(), and the pure privacy level
// epsilon + ln(1 + d delta e^{-epsilon} / eta) it satisfies.
PurifiedChannel PurifyDp(const KrausChannel& channel, double eta, const PrivacyParams& params);

// (eps_total, 0) implies (eps_total - delta, delta).
PrivacyParams RelaxPureDp(double eps_total, double delta);

}  // namespace qpriv

#endif  // QPRIV_PRIVACY_HPP_
