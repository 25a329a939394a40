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

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "qpriv/applications.hpp"
#include "qpriv/divergences.hpp"
#include "qpriv/error.hpp"
#include "qpriv/privacy.hpp"
#include "test_support.hpp"

namespace qpriv {
namespace {

using testing::Diag;
using testing::Pure;

const double kLn3 = std::log(3.0);

Povm ComputationalBasis(int d) {
  std::vector<Matrix> effects;
  for (int i = 0; i < d; ++i) effects.push_back(Pure(d, i).matrix());
  return Povm(d, effects);
}

Ensemble RandomEnsemble(int count, int d, Rng& rng) {
  Ensemble e;
  std::uniform_real_distribution<double> u(0.1, 1.0);
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    e.priors.push_back(u(rng));
    total += e.priors.back();
    e.states.push_back(RandomDensityMatrix(d, 1 + i % d, rng));
  }
  for (double& p : e.priors) p /= total;
  return e;
}

// D(sigma_XB || sigma_X (x) sigma_B) with sigma_XB block diagonal, evaluated
// with the general matrix logarithm on full-rank outputs.
double HolevoOracle(const Ensemble& e, const KrausChannel& channel) {
  const int d = channel.dim_out();
  const int m = static_cast<int>(e.priors.size());
  Matrix xb = Matrix::Zero(m * d, m * d);
  Matrix avg = Matrix::Zero(d, d);
  std::vector<Matrix> outs;
  for (int x = 0; x < m; ++x) {
    outs.push_back(channel.Apply(e.states[x].matrix()));
    avg += e.priors[x] * outs.back();
  }
  Matrix prod = Matrix::Zero(m * d, m * d);
  for (int x = 0; x < m; ++x) {
    xb.block(x * d, x * d, d, d) = e.priors[x] * outs[x];
    prod.block(x * d, x * d, d, d) = e.priors[x] * avg;
  }
  return (xb * (xb.log() - prod.log())).trace().real();
}

TEST(FairnessDistance, Examples) {
  Rng rng(1);
  const KrausChannel a = BuildQldpMechanism(RandomEffect(2, rng), 1.0);
  const Povm basis = ComputationalBasis(2);
  const DensityMatrix rho = RandomDensityMatrix(2, 2, rng);
  EXPECT_NEAR(FairnessDistance(a, basis, rho, rho), 0.0, 1e-15);
  EXPECT_NEAR(FairnessDistance(IdentityChannel(3), ComputationalBasis(3), Diag({0.5, 0.3, 0.2}),
                               Diag({0.1, 0.6, 0.3})),
              0.5 * (0.4 + 0.3 + 0.1), 1e-14);
  EXPECT_THROW(FairnessDistance(a, ComputationalBasis(3), rho, rho), Error);
}

TEST(FairnessDistance, BelowOutputTraceDistance) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const KrausChannel n = RandomChannel(3, 2, 2, rng);
    const Matrix e = RandomEffect(2, rng);
    const Povm povm(2, {e, Identity(2) - e});
    const DensityMatrix a = RandomDensityMatrix(3, 3, rng);
    const DensityMatrix b = RandomDensityMatrix(3, 3, rng);
    ASSERT_LE(FairnessDistance(n, povm, a, b), TraceDistance(Apply(n, a), Apply(n, b)) + 1e-12);
  }
}

TEST(FairnessDistance, SeminormProperties) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const KrausChannel n = RandomChannel(2, 3, 2, rng);
    const Povm povm = ComputationalBasis(3);
    const DensityMatrix a = RandomDensityMatrix(2, 2, rng);
    const DensityMatrix b = RandomDensityMatrix(2, 2, rng);
    const DensityMatrix c = RandomDensityMatrix(2, 2, rng);
    const double ab = FairnessDistance(n, povm, a, b);
    ASSERT_NEAR(ab, FairnessDistance(n, povm, b, a), 1e-14);
    ASSERT_LE(ab, FairnessDistance(n, povm, a, c) + FairnessDistance(n, povm, c, b) + 1e-14);
  }
}

TEST(FairnessBound, Values) {
  EXPECT_NEAR(FairnessBound({kLn3, 0.0}, 0.4), 0.2, 1e-15);
  EXPECT_NEAR(FairnessBound({2.0, 1.0}, 0.3), 0.3, 1e-15);
}

TEST(CertifyFairness, BuiltMechanismHolds) {
  Rng rng(4);
  const KrausChannel a = BuildQldpMechanism(RandomEffect(3, rng), kLn3);
  const FairnessCertificate c = CertifyFairness(a, ComputationalBasis(2), {kLn3, 0.0}, 0.4);
  EXPECT_TRUE(c.holds);
  EXPECT_GE(c.margin, 0.0);
  EXPECT_NEAR(c.bound, 0.2, 1e-15);
  EXPECT_EQ(c.pairs, 500);
}

TEST(CertifyFairness, VacuousAndReplacement) {
  Rng rng(5);
  const KrausChannel bare = MeasurementChannelTwoOutcome(RandomEffect(2, rng));
  EXPECT_TRUE(CertifyFairness(bare, ComputationalBasis(2), {1.0, 1.0}, 0.3).holds);
  const KrausChannel replace = ReplacementChannel(2, RandomDensityMatrix(2, 2, rng));
  const FairnessCertificate c = CertifyFairness(replace, ComputationalBasis(2), {0.0, 0.0}, 0.5);
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.margin, 0.0, 1e-12);
}

TEST(CertifyFairness, IdentityChannelFails) {
  const FairnessCertificate c =
      CertifyFairness(IdentityChannel(2), ComputationalBasis(2), {kLn3, 0.0}, 0.4);
  EXPECT_FALSE(c.holds);
  EXPECT_LT(c.margin, 0.0);
}

TEST(Holevo, Examples) {
  Rng rng(6);
  const DensityMatrix rho = RandomDensityMatrix(2, 2, rng);
  const Ensemble same{{0.3, 0.7}, {rho, rho}};
  EXPECT_NEAR(HolevoInformation(same, IdentityChannel(2)), 0.0, 1e-12);
  const Ensemble bit{{0.5, 0.5}, {Pure(2, 0), Pure(2, 1)}};
  EXPECT_NEAR(HolevoInformation(bit, IdentityChannel(2)), std::log(2.0), 1e-12);
  EXPECT_NEAR(HolevoBound(0.0), 0.0, 1e-15);
  const Ensemble bad{{0.5, 0.6}, {rho, rho}};
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(Holevo, MatchesRelativeEntropyForm) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Ensemble e = RandomEnsemble(3, 2, rng);
    const KrausChannel dep = DepolarizingChannel(2, 0.2);
    EXPECT_NEAR(HolevoInformation(e, dep), HolevoOracle(e, dep), 1e-8);
  }
}

TEST(Holevo, StabilityOnBuiltMechanism) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const KrausChannel a = BuildQldpMechanism(RandomEffect(2, rng), 1.0);
    const HolevoStability s = HolevoStabilityCheck(RandomEnsemble(4, 2, rng), a, 1.0);
    EXPECT_TRUE(s.holds);
    EXPECT_LE(s.value, s.bound + 1e-9);
  }
  const HolevoStability zero =
      HolevoStabilityCheck(RandomEnsemble(4, 2, rng), BuildQldpMechanism(Pure(2, 0).matrix(), 0.0),
                           0.0);
  EXPECT_TRUE(zero.holds);
  EXPECT_NEAR(zero.value, 0.0, 1e-12);
}

TEST(Holevo, RangeAndBoundShape) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 3;
    const Ensemble e = RandomEnsemble(2 + trial % 4, d, rng);
    const double v = HolevoInformation(e, RandomChannel(d, d, 2, rng));
    ASSERT_GE(v, -1e-12);
    ASSERT_LE(v, std::log(static_cast<double>(d)) + 1e-12);
  }
  double previous = 0.0;
  for (double eps = 0.05; eps <= 8.0; eps += 0.05) {
    const double b = HolevoBound(eps);
    ASSERT_GT(b, previous);
    ASSERT_LE(b, std::min(eps, eps * eps / 2.0));
    previous = b;
  }
}

}  // namespace
}  // namespace qpriv
