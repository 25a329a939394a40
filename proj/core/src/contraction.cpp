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

#include "qpriv/contraction.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qpriv/error.hpp"
#include "qpriv/parallel.hpp"

namespace qpriv {
namespace {

double Ratio(double num, double den, double tol_denom) {
  if (!(den >= tol_denom) || !std::isfinite(den)) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

Matrix RandomProjectiveEffect(int dim, Rng& rng) {
  std::uniform_int_distribution<int> rank_dist(1, dim - 1);
  const int rank = rank_dist(rng);
  const Matrix u = RandomUnitary(dim, rng);
  return Hermitize(u.leftCols(rank) * u.leftCols(rank).adjoint());
}

struct Trial {
  std::shared_ptr<const KrausChannel> channel;
  Matrix rho;
  Matrix sigma;
  PairSource source = PairSource::kRandomMixed;
};

Trial DrawTrial(const ScanConfig& config, std::size_t index) {
  Rng rng(DeriveSeed(config.seed, index));
  std::uniform_int_distribution<int> dim_dist(config.dim_min, config.dim_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = dim_dist(rng);
  const double u = unit(rng);
  Trial t;
  if (u < 0.2) {
    ExtremalInstance e = MakeExtremalInstance(config.params, d, rng);
    t.channel = std::make_shared<const KrausChannel>(std::move(e.channel));
    t.rho = e.rho.matrix();
    t.sigma = e.sigma.matrix();
    t.source = PairSource::kExtremal;
    return t;
  }
  const int d_out = dim_dist(rng);
  t.channel = std::make_shared<const KrausChannel>(RandomPrivateChannel(config.params, d, d_out, rng));
  if (u < 0.6) {
    std::uniform_int_distribution<int> rank_dist(1, d);
    t.rho = RandomDensityMatrix(d, rank_dist(rng), rng).matrix();
    t.sigma = RandomDensityMatrix(d, rank_dist(rng), rng).matrix();
    t.source = PairSource::kRandomMixed;
  } else {
    auto [a, b] = RandomOrthonormalPair(d, rng);
    t.rho = Projector(a);
    t.sigma = Projector(b);
    t.source = PairSource::kOrthogonalPure;
  }
  return t;
}

double Evaluate(const ScanConfig& config, const ConvexFunction& f, const Trial& t) {
  const DensityMatrix rho = DensityMatrix::Unchecked(t.rho);
  const DensityMatrix sigma = DensityMatrix::Unchecked(t.sigma);
  const DensityMatrix out_rho = Apply(*t.channel, rho);
  const DensityMatrix out_sigma = Apply(*t.channel, sigma);
  switch (config.divergence) {
    case DivergenceId::kTrace:
      return Ratio(TraceDistance(out_rho, out_sigma), TraceDistance(rho, sigma), config.tol_denom);
    case DivergenceId::kHockey:
      return Ratio(HockeyStickExtended(out_rho, out_sigma, config.gamma),
                   HockeyStickExtended(rho, sigma, config.gamma), config.tol_denom);
    case DivergenceId::kBures:
      return Ratio(BuresSquared(out_rho, out_sigma), TraceDistance(rho, sigma), config.tol_denom);
    case DivergenceId::kRelativeEntropy:
      return Ratio(RelativeEntropy(out_rho, out_sigma), TraceDistance(rho, sigma),
                   config.tol_denom);
    case DivergenceId::kFDivergence: {
      const FDivergenceBound bound = BoundFDivergence(config.params, f);
      const double den = bound.relative_to_trace ? TraceDistance(rho, sigma)
                                                 : FDivergence(rho, sigma, f);
      if (!(den >= config.tol_denom) || !std::isfinite(den)) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      return FDivergence(out_rho, out_sigma, f) / den;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double BoundHockeyStick(double epsilon, double gamma) {
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::kInvalidParams, "epsilon must be >= 0");
  const double e = std::exp(epsilon);
  if (!(gamma >= 1.0 / e) || std::isnan(gamma)) {
    throw Error(ErrorCode::kGammaOutOfRange, "gamma below e^{-epsilon}");
  }
  if (gamma >= e) return 0.0;
  if (gamma >= 1.0) return (e - gamma) / (e + 1.0);
  return (gamma * e - 1.0) / (gamma * (e + 1.0));
}

double TraceContractionCoefficient(const PrivacyParams& params) {
  params.Validate();
  const double e = std::exp(params.epsilon);
  return (e - 1.0 + 2.0 * params.delta) / (e + 1.0);
}

double BoundBures(double epsilon) {
  const double h = std::expm1(0.5 * epsilon);
  return 2.0 * h * h / (std::exp(epsilon) + 1.0);
}

double BoundBuresWeak(double epsilon) {
  const double e = std::exp(epsilon);
  const double s = std::exp(0.5 * epsilon);
  return 2.0 * (e - 1.0) * s / ((e + 1.0) * (s + 1.0));
}

double BoundRelativeEntropy(double epsilon) {
  return epsilon * std::tanh(0.5 * epsilon);
}

FDivergenceBound BoundFDivergence(const PrivacyParams& params, const ConvexFunction& f) {
  params.Validate();
  if (params.delta > 0.0) return {TraceContractionCoefficient(params), false};
  const double e = std::exp(params.epsilon);
  return {(f.f(e) + e * f.f(1.0 / e)) / (e + 1.0), true};
}

std::string ToString(DivergenceId id) {
  switch (id) {
    case DivergenceId::kTrace: return "trace";
    case DivergenceId::kHockey: return "hockey";
    case DivergenceId::kBures: return "bures";
    case DivergenceId::kRelativeEntropy: return "relent";
    case DivergenceId::kFDivergence: return "fdiv";
  }
  return "unknown";
}

DivergenceId ParseDivergenceId(const std::string& name) {
  for (DivergenceId id : {DivergenceId::kTrace, DivergenceId::kHockey, DivergenceId::kBures,
                          DivergenceId::kRelativeEntropy, DivergenceId::kFDivergence}) {
    if (ToString(id) == name) return id;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown divergence '" + name + "'");
}

std::string ToString(PairSource source) {
  switch (source) {
    case PairSource::kRandomMixed: return "random_mixed";
    case PairSource::kOrthogonalPure: return "orthogonal_pure";
    case PairSource::kExtremal: return "extremal";
  }
  return "unknown";
}

ExtremalInstance MakeExtremalInstance(const PrivacyParams& params, int dim, Rng& rng) {
  auto [a, b] = RandomOrthonormalPair(dim, rng);
  KrausChannel channel = BuildEpsDeltaMechanism(Projector(a), params);
  return {std::move(channel), DensityMatrix::Unchecked(Projector(a)),
          DensityMatrix::Unchecked(Projector(b))};
}

KrausChannel RandomPrivateChannel(const PrivacyParams& params, int dim_in, int dim_out,
                                  Rng& rng) {
  std::uniform_int_distribution<int> kraus_dist(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int mid = dim_in;
  const KrausChannel pre = RandomChannel(dim_in, mid, kraus_dist(rng), rng);
  const Matrix effect =
      unit(rng) < 0.5 ? RandomProjectiveEffect(mid, rng) : RandomEffect(mid, rng);
  const KrausChannel mechanism = BuildEpsDeltaMechanism(effect, params);
  const int post_kraus = std::max(kraus_dist(rng), (2 + dim_out - 1) / dim_out);
  const KrausChannel post = RandomChannel(2, dim_out, post_kraus, rng);
  return Compose(post, Compose(mechanism, pre));
}

ContractionReport Scan(const ScanConfig& config) {
  config.params.Validate();
  if (config.dim_min < 2 || config.dim_max > 8 || config.dim_min > config.dim_max) {
    throw Error(ErrorCode::kInvalidParams, "scan dims must lie in 2..8");
  }
  if (config.trials < 1) throw Error(ErrorCode::kInvalidParams, "trials must be >= 1");
  const ConvexFunction f = config.f.value_or(KlFunction());

  ContractionReport report;
  report.divergence = config.divergence;
  report.epsilon = config.params.epsilon;
  report.delta = config.params.delta;
  report.trials = config.trials;
  switch (config.divergence) {
    case DivergenceId::kTrace:
      report.theory_bound = TraceContractionCoefficient(config.params);
      break;
    case DivergenceId::kHockey:
      report.gamma = config.gamma;
      if (config.params.delta > 0.0) {
        throw Error(ErrorCode::kInvalidParams, "hockey-stick scan needs delta = 0");
      }
      report.theory_bound = BoundHockeyStick(config.params.epsilon, config.gamma);
      break;
    case DivergenceId::kBures:
      report.theory_bound = BoundBures(config.params.epsilon);
      break;
    case DivergenceId::kRelativeEntropy:
      report.theory_bound = BoundRelativeEntropy(config.params.epsilon);
      break;
    case DivergenceId::kFDivergence:
      report.theory_bound = BoundFDivergence(config.params, f).coefficient;
      break;
  }

  const auto n = static_cast<std::size_t>(config.trials);
  std::vector<double> ratios(n, std::numeric_limits<double>::quiet_NaN());
  ParallelFor(n, [&](std::size_t i) { ratios[i] = Evaluate(config, f, DrawTrial(config, i)); });

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(ratios[i])) continue;
    ++report.valid_pairs;
    if (!best || ratios[i] > ratios[*best]) best = i;
  }
  if (!best) throw Error(ErrorCode::kNoValidPairs, "every sampled denominator was degenerate");

  const Trial witness = DrawTrial(config, *best);
  report.empirical_sup = std::max(0.0, ratios[*best]);
  report.witness_rho = witness.rho;
  report.witness_sigma = witness.sigma;
  report.witness_channel = witness.channel;
  report.witness_source = witness.source;
  report.violation = report.empirical_sup > report.theory_bound + config.tol_scan;
  return report;
}

}  // namespace qpriv
