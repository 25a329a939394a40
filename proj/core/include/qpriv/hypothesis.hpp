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

// Symmetric binary discrimination: Helstrom error, exact sample complexity
// and the analytic sample-complexity bounds with and without privacy.

#ifndef QPRIV_HYPOTHESIS_HPP_
#define QPRIV_HYPOTHESIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qpriv/privacy.hpp"
#include "qpriv/quantum_core.hpp"

namespace qpriv {

struct HypothesisInstance {
  DensityMatrix rho;
  DensityMatrix sigma;
  double prior_p = 0.5;
  double alpha = 0.1;

  double q() const { return 1.0 - prior_p; }
  // Throws on mismatched dims, prior outside (0, 1) or alpha <= 0.
  void Validate() const;
};

// Same priors and target, states replaced by their channel images.
HypothesisInstance PushForward(const HypothesisInstance& inst, const KrausChannel& channel);

enum class ScMethod { kDense, kClassicalFastPath, kBoundsOnly };
std::string ToString(ScMethod method);

struct SampleComplexityResult {
  std::optional<long> exact;
  double lower = 0.0;
  double upper = 0.0;
  ScMethod method = ScMethod::kBoundsOnly;
};

struct LowPrivacyReport {
  int k = 0;
  double k_prime = 0.0;
  double L = 1.0;
  Povm measurement;
  double bures_states = 0.0;
  double bures_outcomes = 0.0;
  // ((e^eps - 1)/(e^eps + 1))^2 >= 1 / d_B^2
  bool condition_holds = false;
};

// Outcome distributions of a commuting pair in a common eigenbasis.
struct ClassicalPair {
  std::vector<double> p;
  std::vector<double> q;
};

// Present when ||[rho, sigma]||_max <= 1e-10 and a common eigenbasis is found.
std::optional<ClassicalPair> AsClassicalPair(const DensityMatrix& rho, const DensityMatrix& sigma);

enum class ErrorPath { kAuto, kDense, kClassical };

double HelstromError(const HypothesisInstance& inst);

// (1 - ||p rho^n - q sigma^n||_1) / 2. kAuto prefers the classical path and
// falls back to dense tensor powers; DimensionBudgetExceeded otherwise.
double HelstromErrorN(const HypothesisInstance& inst, long n, ErrorPath path = ErrorPath::kAuto);

inline constexpr long kDefaultMaxCopies = 100000;

// Smallest n with error <= alpha. Unbounded when rho = sigma; a bounds-only
// result when nothing is found up to n_max or the dense budget.
SampleComplexityResult ExactSampleComplexity(const HypothesisInstance& inst,
                                             long n_max = kDefaultMaxCopies);

SampleComplexityResult NonprivateScBounds(const HypothesisInstance& inst);
SampleComplexityResult PrivateScBounds(const HypothesisInstance& inst, double epsilon);
SampleComplexityResult OrthogonalScBounds(double epsilon, double p, double alpha);
SampleComplexityResult InstanceSpecificBounds(const HypothesisInstance& inst, double epsilon);

// Output-spectrum condition max(lambda_min(A rho), lambda_min(A sigma)) >=
// 1/(e^eps + 1) - 1e-9 together with certification at (eps, 0).
bool WEpsMember(const KrausChannel& channel, const HypothesisInstance& inst, double epsilon,
                const SearchBudget& budget = {});

LowPrivacyReport LowPrivacyAnalysis(const HypothesisInstance& inst, double epsilon);

SampleComplexityResult MultipleHypothesisBounds(const std::vector<DensityMatrix>& states,
                                                const std::vector<double>& priors,
                                                double epsilon, double alpha);

struct BetaSearch {
  int grid_points = 2000;
  int polish_iterations = 200;
};
double AsymmetricLowerBound(double epsilon, double alpha1, double alpha2,
                            const BetaSearch& search = {});

double HeterogeneousMechanismLowerBound(const HypothesisInstance& inst, double epsilon);

}  // namespace qpriv

#endif  // QPRIV_HYPOTHESIS_HPP_
