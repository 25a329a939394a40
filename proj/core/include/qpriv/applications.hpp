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

// Fairness certificates and Holevo-information stability of private channels.

#ifndef QPRIV_APPLICATIONS_HPP_
#define QPRIV_APPLICATIONS_HPP_

#include <cstdint>
#include <vector>

#include "qpriv/privacy.hpp"
#include "qpriv/quantum_core.hpp"

namespace qpriv {

struct Ensemble {
  std::vector<double> priors;
  std::vector<DensityMatrix> states;

  // Nonnegative priors summing to 1 within 1e-12, one per state, equal dims.
  void Validate() const;
};

// (1/2) sum_i |Tr[M_i (E(rho) - E(sigma))]|
double FairnessDistance(const KrausChannel& channel, const Povm& povm, const DensityMatrix& rho,
                        const DensityMatrix& sigma);

// alpha (e^eps - 1 + 2 delta) / (e^eps + 1)
double FairnessBound(const PrivacyParams& params, double alpha_bound);

struct FairnessOptions {
  int pairs = 500;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct FairnessCertificate {
  bool holds = false;
  // Smallest bound - distance over the sampled pairs.
  double margin = 0.0;
  double bound = 0.0;
  int pairs = 0;
};

// Samples pairs with T(rho, sigma) <= alpha_bound and checks the fairness
// bound on each. A failure is reported, not thrown.
FairnessCertificate CertifyFairness(const KrausChannel& channel, const Povm& povm,
                                    const PrivacyParams& params, double alpha_bound,
                                    const FairnessOptions& options = {});

// S(sum_x P(x) A(rho_x)) - sum_x P(x) S(A(rho_x)), natural log.
double HolevoInformation(const Ensemble& ensemble, const KrausChannel& channel);

// eps (e^eps - 1)/(e^eps + 1)
double HolevoBound(double epsilon);

struct HolevoStability {
  bool holds = false;
  double value = 0.0;
  double bound = 0.0;
};

HolevoStability HolevoStabilityCheck(const Ensemble& ensemble, const KrausChannel& channel,
                                     double epsilon, double tolerance = 1e-9);

}  // namespace qpriv

#endif  // QPRIV_APPLICATIONS_HPP_
