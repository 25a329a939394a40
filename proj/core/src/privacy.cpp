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

#include "qpriv/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qpriv/error.hpp"
#include "qpriv/parallel.hpp"
#include "qpriv/random.hpp"

namespace qpriv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxAlternations = 100;

// Output eigenvalues at or below this are treated as the kernel when forming
// likelihood ratios.
constexpr double kRatioKernel = 1e-13;

struct Candidate {
  double value = -kInf;
  Vector first;
  Vector second;
  int iterations = 0;
};

// Objective over orthonormal pairs together with its alternating maximiser.
class PairObjective {
 public:
  virtual ~PairObjective() = default;
  virtual double Value(const Vector& a, const Vector& b) const = 0;
  // Output-side effect that is optimal for the pair (a, b).
  virtual Matrix BestEffect(const Vector& a, const Vector& b) const = 0;
  // Orthonormal pair that is optimal for a fixed heisenberg-picture effect.
  static std::pair<Vector, Vector> BestPair(const Matrix& heisenberg) {
    const HermitianEigen eig = EigenDecompose(heisenberg);
    const Eigen::Index n = eig.values.size();
    return {eig.vectors.col(n - 1), eig.vectors.col(0)};
  }
};

class HockeyObjective : public PairObjective {
 public:
  HockeyObjective(const KrausChannel& channel, double gamma) : channel_(channel), gamma_(gamma) {}

  double Value(const Vector& a, const Vector& b) const override {
    const RealVector ev = Eigenvalues(Difference(a, b));
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::max(0.0, ev(i));
    return s;
  }

  Matrix BestEffect(const Vector& a, const Vector& b) const override {
    return PositiveEigenprojector(Difference(a, b));
  }

 private:
  Matrix Difference(const Vector& a, const Vector& b) const {
    return channel_.Apply(Projector(a)) - gamma_ * channel_.Apply(Projector(b));
  }
  const KrausChannel& channel_;
  double gamma_;
};

class MaxDivergenceObjective : public PairObjective {
 public:
  explicit MaxDivergenceObjective(const KrausChannel& channel) : channel_(channel) {}

  double Value(const Vector& a, const Vector& b) const override {
    return Ratio(a, b).value;
  }

  Matrix BestEffect(const Vector& a, const Vector& b) const override {
    return Ratio(a, b).effect;
  }

 private:
  struct RatioResult {
    double value = 0.0;  // ln of the best likelihood ratio
    Matrix effect;
  };

  RatioResult Ratio(const Vector& a, const Vector& b) const {
    const Matrix ra = Hermitize(channel_.Apply(Projector(a)));
    const Matrix rb = Hermitize(channel_.Apply(Projector(b)));
    const HermitianEigen eb = EigenDecompose(rb);
    const Eigen::Index d = eb.values.size();
    std::vector<Eigen::Index> support;
    Matrix kernel_projector = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (eb.values(i) > kRatioKernel) {
        support.push_back(i);
      } else {
        kernel_projector += Projector(eb.vectors.col(i));
      }
    }
    RatioResult out;
    const double leaked = RealTrace(kernel_projector * ra);
    if (leaked > tol::kSupp || support.empty()) {
      out.value = kInf;
      out.effect = kernel_projector;
      return out;
    }
    const auto k = static_cast<Eigen::Index>(support.size());
    Matrix basis(d, k);
    RealVector inv_sqrt(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      basis.col(j) = eb.vectors.col(support[j]);
      inv_sqrt(j) = 1.0 / std::sqrt(eb.values(support[j]));
    }
    const Matrix whitened = inv_sqrt.cast<Complex>().asDiagonal() * basis.adjoint() * ra *
                            basis * inv_sqrt.cast<Complex>().asDiagonal();
    const HermitianEigen ew = EigenDecompose(whitened);
    const double top = ew.values(k - 1);
    out.value = top > 0.0 ? std::log(top) : -kInf;
    Vector w = basis * (inv_sqrt.cast<Complex>().asDiagonal() * ew.vectors.col(k - 1));
    w.normalize();
    out.effect = Projector(w);
    return out;
  }

  const KrausChannel& channel_;
};

void Orthonormalise(Vector& a, Vector& b) {
  a.normalize();
  b -= a.dot(b) * a;
  b.normalize();
}

// One restart: alternate effect and pair until stalled, then polish by
// shrinking random perturbations of the pair.
Candidate RunRestart(const PairObjective& objective, const KrausChannel& channel,
                     const SearchBudget& budget, std::size_t index) {
  Rng rng(DeriveSeed(budget.seed, index));
  const int d = channel.dim_in();
  Candidate best;
  Vector a;
  Vector b;
  if (index % 2 == 0) {
    std::tie(a, b) = RandomOrthonormalPair(d, rng);
  } else {
    const Matrix effect = RandomEffect(channel.dim_out(), rng);
    std::tie(a, b) = PairObjective::BestPair(channel.ApplyAdjoint(effect));
  }
  best.value = objective.Value(a, b);
  best.first = a;
  best.second = b;

  for (int it = 0; it < kMaxAlternations && std::isfinite(best.value); ++it) {
    ++best.iterations;
    const Matrix effect = objective.BestEffect(best.first, best.second);
    auto [na, nb] = PairObjective::BestPair(channel.ApplyAdjoint(effect));
    const double v = objective.Value(na, nb);
    if (!(v > best.value + 1e-15)) break;
    best.value = v;
    best.first = std::move(na);
    best.second = std::move(nb);
  }

  double step = 0.1;
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int it = 0; it < budget.polish_steps && std::isfinite(best.value) && step > 1e-12;
       ++it) {
    ++best.iterations;
    Vector na = best.first;
    Vector nb = best.second;
    Vector& target = (it % 2 == 0) ? na : nb;
    for (Eigen::Index i = 0; i < target.size(); ++i) {
      target(i) += step * Complex(normal(rng), normal(rng));
    }
    if (it % 2 == 0) {
      Orthonormalise(na, nb);
    } else {
      Orthonormalise(nb, na);
    }
    const double v = objective.Value(na, nb);
    if (v > best.value) {
      best.value = v;
      best.first = std::move(na);
      best.second = std::move(nb);
      step *= 1.5;
    } else {
      step *= 0.7;
    }
  }
  return best;
}

Candidate Search(const PairObjective& objective, const KrausChannel& channel,
                 const SearchBudget& budget) {
  if (channel.dim_in() < 2) {
    // One input state only: every pair is identical.
    Candidate c;
    c.value = 0.0;
    c.first = Vector::Ones(1);
    c.second = Vector::Ones(1);
    return c;
  }
  const auto restarts = static_cast<std::size_t>(std::max(1, budget.restarts));
  std::vector<Candidate> results(restarts);
  ParallelFor(restarts, [&](std::size_t r) {
    results[r] = RunRestart(objective, channel, budget, r);
  });
  Candidate best = results.front();
  int iterations = 0;
  for (const Candidate& c : results) {
    iterations += c.iterations;
    if (c.value > best.value) best = c;
  }
  best.iterations = iterations;
  return best;
}

}  // namespace

void PrivacyParams::Validate() const {
  if (!(epsilon >= 0.0) || std::isnan(epsilon)) {
    throw Error(ErrorCode::kInvalidParams, "epsilon must be >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "delta must lie in [0, 1]");
  }
}

KrausChannel BuildQldpMechanism(const Matrix& effect, double epsilon) {
  return BuildEpsDeltaMechanism(effect, {epsilon, 0.0});
}

KrausChannel BuildEpsDeltaMechanism(const Matrix& effect, const PrivacyParams& params) {
  params.Validate();
  const KrausChannel readout = MeasurementChannelTwoOutcome(effect);
  const double p = std::min(1.0, 2.0 * (1.0 - params.delta) / (std::exp(params.epsilon) + 1.0));
  return Compose(DepolarizingChannel(2, p), readout);
}

CertificationResult Certify(const KrausChannel& channel, const PrivacyParams& params,
                            const SearchBudget& budget) {
  params.Validate();
  const HockeyObjective objective(channel, std::exp(params.epsilon));
  const Candidate best = Search(objective, channel, budget);
  CertificationResult out;
  out.worst_value = std::max(0.0, best.value);
  out.witness_first = best.first;
  out.witness_second = best.second;
  out.iterations = best.iterations;
  out.certified = out.worst_value <= params.delta + kTolCert;
  return out;
}

double EstimateEpsilon(const KrausChannel& channel, const SearchBudget& budget) {
  const MaxDivergenceObjective objective(channel);
  const Candidate best = Search(objective, channel, budget);
  if (!(best.value <= kEpsilonCap)) return kInf;
  return std::max(0.0, best.value);
}

PurifiedChannel PurifyDp(const KrausChannel& channel, double eta, const PrivacyParams& params) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw Error(ErrorCode::kInvalidEta, "eta must lie in (0, 1), got " + std::to_string(eta));
  }
  params.Validate();
  const int d = channel.dim_out();
  const double eps_prime =
      params.epsilon + std::log1p(d * params.delta * std::exp(-params.epsilon) / eta);
  return {Compose(DepolarizingChannel(d, eta), channel), eps_prime};
}

PrivacyParams RelaxPureDp(double eps_total, double delta) {
  if (!(delta >= 0.0 && eps_total >= delta && delta <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "need eps_total >= delta >= 0");
  }
  return {eps_total - delta, delta};
}

}  // namespace qpriv
