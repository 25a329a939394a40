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

// Closed-form contraction coefficients of private channels and a randomized
// scanner that checks them against a family of provably private channels.

#ifndef QPRIV_CONTRACTION_HPP_
#define QPRIV_CONTRACTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qpriv/divergences.hpp"
#include "qpriv/privacy.hpp"
#include "qpriv/random.hpp"

namespace qpriv {

// E_gamma contraction under epsilon-privacy. gamma >= e^epsilon gives 0;
// gamma < e^{-epsilon} throws GammaOutOfRange.
double BoundHockeyStick(double epsilon, double gamma);

// (e^eps - 1 + 2 delta) / (e^eps + 1).
double TraceContractionCoefficient(const PrivacyParams& params);

// Coefficients of T(rho, sigma) bounding d_B^2 and D of the outputs.
double BoundBures(double epsilon);
double BoundBuresWeak(double epsilon);
double BoundRelativeEntropy(double epsilon);

struct FDivergenceBound {
  double coefficient = 0.0;
  // True: multiplies T(rho, sigma). False: multiplies D_f(rho || sigma).
  bool relative_to_trace = true;
};
FDivergenceBound BoundFDivergence(const PrivacyParams& params, const ConvexFunction& f);

enum class DivergenceId { kTrace, kHockey, kBures, kRelativeEntropy, kFDivergence };

std::string ToString(DivergenceId id);
// Accepts trace, hockey, bures, relent, fdiv.
DivergenceId ParseDivergenceId(const std::string& name);

enum class PairSource { kRandomMixed, kOrthogonalPure, kExtremal };

std::string ToString(PairSource source);

struct ScanConfig {
  DivergenceId divergence = DivergenceId::kTrace;
  PrivacyParams params;
  double gamma = 1.0;  // used by kHockey
  std::optional<ConvexFunction> f;  // used by kFDivergence; defaults to KL
  int dim_min = 2;
  int dim_max = 4;
  int trials = 10000;
  std::uint64_t seed = 0;
  double tol_scan = 1e-6;
  double tol_denom = 1e-8;
};

struct ContractionReport {
  DivergenceId divergence = DivergenceId::kTrace;
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<double> gamma;
  double theory_bound = 0.0;
  double empirical_sup = 0.0;
  std::optional<Matrix> witness_rho;
  std::optional<Matrix> witness_sigma;
  std::shared_ptr<const KrausChannel> witness_channel;
  PairSource witness_source = PairSource::kRandomMixed;
  int trials = 0;
  int valid_pairs = 0;
  bool violation = false;
};

// A private channel together with an input pair on which the trace bound
// is attained: orthogonal pure states read out by their own projector.
struct ExtremalInstance {
  KrausChannel channel;
  DensityMatrix rho;
  DensityMatrix sigma;
};
ExtremalInstance MakeExtremalInstance(const PrivacyParams& params, int dim, Rng& rng);

// Member of the family P o (mechanism) o Q with random P, Q and a random
// effect; private at params by data processing.
KrausChannel RandomPrivateChannel(const PrivacyParams& params, int dim_in, int dim_out, Rng& rng);

// Max over sampled trials of the divergence ratio after vs. before the
// channel. Violations are flagged in the report, never thrown. Throws
// NoValidPairs when every denominator is below tol_denom.
ContractionReport Scan(const ScanConfig& config);

}  // namespace qpriv

#endif  // QPRIV_CONTRACTION_HPP_
