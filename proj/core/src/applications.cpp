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

#include "qpriv/applications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpriv/divergences.hpp"
#include "qpriv/error.hpp"
#include "qpriv/parallel.hpp"
#include "qpriv/random.hpp"

namespace qpriv {

void Ensemble::Validate() const {
  if (priors.size() != states.size() || states.empty()) {
    throw Error(ErrorCode::kInvalidParams, "ensemble needs one prior per state");
  }
  double total = 0.0;
  for (double p : priors) {
    if (!(p >= 0.0)) throw Error(ErrorCode::kInvalidProbability, "negative prior");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidProbability, "priors sum to " + std::to_string(total));
  }
  for (const DensityMatrix& s : states) {
    if (s.dim() != states.front().dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "ensemble states differ in dimension");
    }
  }
}

double FairnessDistance(const KrausChannel& channel, const Povm& povm, const DensityMatrix& rho,
                        const DensityMatrix& sigma) {
  if (povm.dim() != channel.dim_out()) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM does not act on the channel output");
  }
  const Matrix diff = channel.Apply(rho.matrix() - sigma.matrix());
  double s = 0.0;
  for (const Matrix& m : povm.effects()) s += std::abs((m * diff).trace().real());
  return 0.5 * s;
}

double FairnessBound(const PrivacyParams& params, double alpha_bound) {
  params.Validate();
  const double e = std::exp(params.epsilon);
  return alpha_bound * (e - 1.0 + 2.0 * params.delta) / (e + 1.0);
}

FairnessCertificate CertifyFairness(const KrausChannel& channel, const Povm& povm,
                                    const PrivacyParams& params, double alpha_bound,
                                    const FairnessOptions& options) {
  if (!(alpha_bound > 0.0 && alpha_bound <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "alpha_bound must lie in (0, 1]");
  }
  FairnessCertificate out;
  out.bound = FairnessBound(params, alpha_bound);
  out.pairs = std::max(1, options.pairs);
  const int d = channel.dim_in();
  std::vector<double> slack(static_cast<std::size_t>(out.pairs));
  ParallelFor(slack.size(), [&](std::size_t i) {
    Rng rng(DeriveSeed(options.seed, i));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix a;
    Matrix b;
    if (i % 2 == 0 && d >= 2) {
      auto [u, v] = RandomOrthonormalPair(d, rng);
      a = Projector(u);
      b = Projector(v);
    } else {
      std::uniform_int_distribution<int> rank(1, d);
      a = RandomDensityMatrix(d, rank(rng), rng).matrix();
      b = RandomDensityMatrix(d, rank(rng), rng).matrix();
    }
    const DensityMatrix rho = DensityMatrix::Unchecked(a);
    double t = TraceDistance(rho, DensityMatrix::Unchecked(b));
    if (t > alpha_bound) {
      // Move sigma toward rho so the pair lands inside the T-ball; half of
      // the draws sit on its boundary.
      const double scale = (alpha_bound / t) * (i % 4 < 2 ? 1.0 : unit(rng));
      b = (1.0 - scale) * a + scale * b;
    }
    const DensityMatrix sigma = DensityMatrix::Unchecked(b);
    slack[i] = out.bound - FairnessDistance(channel, povm, rho, sigma);
  });
  out.margin = *std::min_element(slack.begin(), slack.end());
  out.holds = out.margin >= -options.tolerance;
  return out;
}

double HolevoInformation(const Ensemble& ensemble, const KrausChannel& channel) {
  ensemble.Validate();
  const int d = channel.dim_out();
  Matrix average = Matrix::Zero(d, d);
  double conditional = 0.0;
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    const DensityMatrix out = Apply(channel, ensemble.states[x]);
    average += ensemble.priors[x] * out.matrix();
    conditional += ensemble.priors[x] * VonNeumannEntropy(out);
  }
  return std::max(0.0, VonNeumannEntropy(DensityMatrix::Unchecked(average)) - conditional);
}

double HolevoBound(double epsilon) {
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::kInvalidParams, "epsilon must be >= 0");
  return epsilon * std::tanh(0.5 * epsilon);
}

HolevoStability HolevoStabilityCheck(const Ensemble& ensemble, const KrausChannel& channel,
                                     double epsilon, double tolerance) {
  HolevoStability out;
  out.value = HolevoInformation(ensemble, channel);
  out.bound = HolevoBound(epsilon);
  out.holds = out.value <= out.bound + tolerance;
  return out;
}

}  // namespace qpriv
