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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qpriv/applications.hpp"
#include "qpriv/contraction.hpp"
#include "qpriv/divergences.hpp"
#include "qpriv/hypothesis.hpp"
#include "qpriv/privacy.hpp"
#include "qpriv/random.hpp"

namespace {

using namespace qpriv;

const double kLn3 = std::log(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

void Fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

ScanConfig Config(DivergenceId id, PrivacyParams params, int trials, std::uint64_t seed) {
  ScanConfig c;
  c.divergence = id;
  c.params = params;
  c.trials = trials;
  c.seed = seed;
  c.dim_min = 2;
  c.dim_max = 4;
  return c;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome TraceTightness() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t seed = 101;
  for (double eps : {0.25, 1.0, kLn3, 2.0}) {
    const ContractionReport r = Scan(Config(DivergenceId::kTrace, {eps, 0.0}, 10000, seed++));
    const double target = std::tanh(eps / 2.0);
    if (r.empirical_sup < target - 1e-6 || r.empirical_sup > target + 1e-8 || r.violation) {
      Fail(o, Fmt("eps=%.4f sup=%.12f target=%.12f", eps, r.empirical_sup, target));
    }
    if (r.witness_source != PairSource::kExtremal) {
      Fail(o, Fmt("eps=%.4f witness is not the built mechanism", eps));
    }
  }
  const double t = Seconds(start);
  if (t >= 60.0) Fail(o, Fmt("runtime %.1fs", t));
  if (o.pass) o.detail = Fmt("4 scans x 10000 trials in %.1fs", t);
  return o;
}

Outcome HockeyConverse() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t seed = 201;
  double worst_gap = -1.0;
  for (double eps : {0.5, 1.0, 2.0}) {
    for (int i = 0; i <= 10; ++i) {
      ScanConfig c = Config(DivergenceId::kHockey, {eps, 0.0}, 10000, seed++);
      c.gamma = std::exp(-eps + 2.0 * eps * i / 10.0);
      const ContractionReport r = Scan(c);
      worst_gap = std::max(worst_gap, r.empirical_sup - r.theory_bound);
      if (r.violation || r.empirical_sup > r.theory_bound + 1e-6) {
        Fail(o, Fmt("eps=%.2f gamma=%.6f sup exceeds bound by %.3e", eps, c.gamma,
                    r.empirical_sup - r.theory_bound));
      }
    }
  }
  const double t = Seconds(start);
  if (t >= 300.0) Fail(o, Fmt("runtime %.1fs", t));
  if (o.pass) o.detail = Fmt("33 grid points x 10000 trials, max(sup-bound)=%.3e, %.1fs", worst_gap, t);
  return o;
}

Outcome EpsDeltaTightness() {
  Outcome o;
  Rng rng(301);
  std::uint64_t seed = 302;
  double worst = 0.0;
  for (double eps : {0.5, 1.0, kLn3}) {
    for (double delta : {0.0, 0.1, 0.3}) {
      const PrivacyParams params{eps, delta};
      const double coeff = (std::exp(eps) - 1.0 + 2.0 * delta) / (std::exp(eps) + 1.0);
      for (int d = 2; d <= 4; ++d) {
        const ExtremalInstance x = MakeExtremalInstance(params, d, rng);
        const double ratio = TraceDistance(Apply(x.channel, x.rho), Apply(x.channel, x.sigma)) /
                             TraceDistance(x.rho, x.sigma);
        worst = std::max(worst, std::abs(ratio - coeff));
        if (std::abs(ratio - coeff) > 1e-9) {
          Fail(o, Fmt("eps=%.4f delta=%.1f extremal ratio off by %.3e", eps, delta, ratio - coeff));
        }
      }
      const ContractionReport r = Scan(Config(DivergenceId::kTrace, params, 10000, seed++));
      if (r.violation || r.empirical_sup > coeff + 1e-6) {
        Fail(o, Fmt("eps=%.4f delta=%.1f scan sup=%.12f", eps, delta, r.empirical_sup));
      }
    }
  }
  if (o.pass) o.detail = Fmt("9 settings, max |ratio-coefficient|=%.3e", worst);
  return o;
}

Outcome BuresRelativeEntropy() {
  Outcome o;
  std::uint64_t seed = 401;
  for (double eps : {0.5, 1.0, 2.0}) {
    for (DivergenceId id : {DivergenceId::kBures, DivergenceId::kRelativeEntropy}) {
      const ContractionReport r = Scan(Config(id, {eps, 0.0}, 5000, seed++));
      if (r.violation || r.empirical_sup > r.theory_bound + 1e-6) {
        Fail(o, Fmt("eps=%.2f sup=%.12f bound=%.12f", eps, r.empirical_sup, r.theory_bound) +
                    " " + ToString(id));
      }
    }
  }
  if (o.pass) o.detail = "6 scans x 5000 trials, no ratio above its coefficient";
  return o;
}

Outcome IntegralIdentity() {
  Outcome o;
  Rng rng(501);
  double worst_f = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + i % 2;
    const DensityMatrix a = RandomDensityMatrix(d, d, rng);
    const DensityMatrix b = RandomDensityMatrix(d, d, rng);
    const double gap = std::abs(FDivergence(a, b, KlFunction()) - RelativeEntropy(a, b));
    worst_f = std::max(worst_f, gap);
  }
  if (worst_f > 1e-6) Fail(o, Fmt("f-divergence vs relative entropy gap %.3e", worst_f));
  double worst_skew = 0.0;
  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const int d = 2 + i % 2;
    const DensityMatrix a = RandomDensityMatrix(d, 1 + i % d, rng);
    const DensityMatrix b = RandomDensityMatrix(d, 1 + (i / 2) % d, rng);
    const SkewSymmetry s = SkewSymmetryCheck(a, b, std::exp(lg(rng)));
    worst_skew = std::max(worst_skew, std::abs(s.lhs - s.rhs));
  }
  if (worst_skew > 1e-9) Fail(o, Fmt("skew-symmetry gap %.3e", worst_skew));
  if (o.pass) o.detail = Fmt("max gaps: quadrature %.3e, skew %.3e", worst_f, worst_skew);
  return o;
}

Outcome SpectralLemma() {
  Outcome o;
  Rng rng(601);
  std::uniform_real_distribution<double> lg(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + i % 3;
    const PureState psi = RandomPureState(d, rng);
    const PureState phi = RandomPureState(d, rng);
    const double gamma = std::exp(lg(rng));
    const PurePairSpectrum s = ComputePurePairSpectrum(psi, phi, gamma);
    const Matrix diff = psi.Projector() - gamma * phi.Projector();
    Eigen::ComplexEigenSolver<Matrix> dense(diff);
    double top = -1e300, bottom = 1e300;
    for (Eigen::Index k = 0; k < dense.eigenvalues().size(); ++k) {
      top = std::max(top, dense.eigenvalues()(k).real());
      bottom = std::min(bottom, dense.eigenvalues()(k).real());
    }
    const Matrix recon = s.lambda1 * Projector(s.phi1) - s.lambda2 * Projector(s.phi2);
    worst = std::max({worst, MaxAbs(diff - recon), std::abs(s.lambda1 - top),
                      std::abs(s.lambda2 + bottom)});
  }
  if (worst > 1e-10) Fail(o, Fmt("spectral mismatch %.3e", worst));
  double min_eig = 1e300;
  for (int i = 0; i < 500; ++i) {
    const int d = 2 + i % 3;
    const int dout = 2 + (i / 3) % 3;
    const KrausChannel n = RandomChannel(d, dout, 1 + i % 4 + d / 2, rng);
    const PureState psi = RandomPureState(d, rng);
    const PureState phi = RandomPureState(d, rng);
    const double gamma = std::exp(lg(rng));
    const PurePairSpectrum s = ComputePurePairSpectrum(psi, phi, gamma);
    const Matrix lhs = n.Apply(psi.Projector()) - gamma * n.Apply(phi.Projector());
    const Matrix rhs =
        s.lambda1 * (n.Apply(Projector(s.phi1)) - gamma * n.Apply(Projector(s.phi2)));
    min_eig = std::min(min_eig, Eigenvalues(rhs - lhs).minCoeff());
  }
  if (min_eig < -1e-8) Fail(o, Fmt("operator inequality min eigenvalue %.3e", min_eig));
  if (o.pass) o.detail = Fmt("max spectral error %.3e, min eigenvalue %.3e", worst, min_eig);
  return o;
}

Outcome OrthogonalSandwich() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const HypothesisInstance inst{DensityMatrix::FromPure(PureState::Basis(2, 0)),
                                DensityMatrix::FromPure(PureState::Basis(2, 1)), 0.5, 0.1};
  std::string summary;
  for (double eps : {0.5, 1.0, kLn3}) {
    const KrausChannel a = BuildQldpMechanism(inst.rho.matrix(), eps);
    const SampleComplexityResult exact = ExactSampleComplexity(PushForward(inst, a));
    const SampleComplexityResult b = OrthogonalScBounds(eps, 0.5, 0.1);
    if (!exact.exact || exact.method != ScMethod::kClassicalFastPath) {
      Fail(o, Fmt("eps=%.4f exact SC not found on the fast path", eps));
      continue;
    }
    const double n = static_cast<double>(*exact.exact);
    if (n < b.lower || n > b.upper) {
      Fail(o, Fmt("eps=%.4f exact=%g outside [%.4f, ...]", eps, n, b.lower));
    }
    summary += Fmt("eps=%.3f: %.4f<=%g", eps, b.lower, n) + Fmt("<=%g; ", b.upper);
    if (eps == kLn3 && b.upper != 13.0) Fail(o, Fmt("upper at ln 3 is %g", b.upper));
  }
  const double t = Seconds(start);
  if (t >= 10.0) Fail(o, Fmt("runtime %.1fs", t));
  if (o.pass) o.detail = summary + Fmt("%.2fs", t);
  return o;
}

DensityMatrix NearPure(int dim, Rng& rng) {
  const Matrix psi = RandomPureState(dim, rng).Projector();
  return DensityMatrix::FromMatrix(0.97 * psi + 0.03 * Identity(dim) / dim);
}

Outcome LowPrivacy() {
  Outcome o;
  Rng rng(801);
  double worst_bures = 0.0;
  int regime = 0;
  for (int i = 0; i < 100; ++i) {
    const HypothesisInstance inst{NearPure(2, rng), NearPure(2, rng), 0.5, 0.1};
    for (double eps : {2.0, 3.0, 5.0}) {
      const LowPrivacyReport r = LowPrivacyAnalysis(inst, eps);
      worst_bures = std::max(worst_bures, std::abs(r.bures_outcomes - r.bures_states));
      if (!r.condition_holds || r.k < 2) continue;
      ++regime;
      const KrausChannel a = BuildQldpMechanism(r.measurement.effects()[0], eps);
      const HypothesisInstance out = PushForward(inst, a);
      const double ratio = r.bures_states / BuresSquared(out.rho, out.sigma);
      if (ratio < 1.0 - 1e-9 || ratio > 4.0 + 1e-9) {
        Fail(o, Fmt("pair %g eps=%g Bures ratio %.6f", i, eps, ratio));
      }
      const SampleComplexityResult base = ExactSampleComplexity(inst);
      const SampleComplexityResult priv = ExactSampleComplexity(out);
      if (!base.exact || !priv.exact) {
        Fail(o, Fmt("pair %g eps=%g exact SC unavailable", i, eps));
        continue;
      }
      if (*priv.exact < *base.exact || *priv.exact > 4 * *base.exact) {
        Fail(o, Fmt("pair %g private SC %g vs nonprivate ", i, static_cast<double>(*priv.exact)) +
                    std::to_string(*base.exact));
      }
    }
  }
  if (worst_bures > 1e-8) Fail(o, Fmt("Bures preservation error %.3e", worst_bures));
  if (regime == 0) Fail(o, "no pair entered the low-privacy regime");
  if (o.pass) {
    o.detail = Fmt("Bures error %.3e; %g regime cases within factor 4", worst_bures, regime);
  }
  return o;
}

Povm Basis2() {
  return Povm(2, {DensityMatrix::FromPure(PureState::Basis(2, 0)).matrix(),
                  DensityMatrix::FromPure(PureState::Basis(2, 1)).matrix()});
}

Outcome Applications() {
  Outcome o;
  Rng rng(901);
  double min_margin = 1e300;
  const PrivacyParams settings[] = {{kLn3, 0.0}, {1.0, 0.1}, {0.5, 0.3}};
  std::uint64_t seed = 902;
  for (const PrivacyParams& params : settings) {
    const KrausChannel a = BuildEpsDeltaMechanism(RandomEffect(3, rng), params);
    FairnessOptions options;
    options.seed = seed++;
    const FairnessCertificate c = CertifyFairness(a, Basis2(), params, 0.4, options);
    min_margin = std::min(min_margin, c.margin);
    if (!c.holds || c.margin < 0.0 || c.pairs != 500) {
      Fail(o, Fmt("fairness fails at eps=%.4f delta=%.1f margin=%.3e", params.epsilon,
                  params.delta, c.margin));
    }
  }
  double min_slack = 1e300;
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (double eps : {0.5, 1.0, 2.0}) {
    for (int i = 0; i < 100; ++i) {
      Ensemble e;
      double total = 0.0;
      for (int x = 0; x < 4; ++x) {
        e.priors.push_back(u(rng));
        total += e.priors.back();
        e.states.push_back(RandomDensityMatrix(2, 1 + x % 2, rng));
      }
      for (double& p : e.priors) p /= total;
      const KrausChannel a = BuildQldpMechanism(RandomEffect(2, rng), eps);
      const HolevoStability s = HolevoStabilityCheck(e, a, eps);
      min_slack = std::min(min_slack, s.bound - s.value);
      if (!s.holds) Fail(o, Fmt("Holevo bound fails at eps=%.2f value=%.6f", eps, s.value));
    }
  }
  for (double eps = 0.01; eps <= 10.0; eps += 0.01) {
    if (HolevoBound(eps) > std::min(eps, eps * eps / 2.0)) {
      Fail(o, Fmt("Holevo bound above min{eps, eps^2/2} at eps=%.2f", eps));
    }
  }
  if (o.pass) o.detail = Fmt("fairness min margin %.3e, Holevo min slack %.3e", min_margin, min_slack);
  return o;
}

Outcome Conversions() {
  Outcome o;
  Rng rng(1001);
  std::uniform_real_distribution<double> eps_dist(0.2, 2.0);
  std::uniform_real_distribution<double> delta_dist(0.01, 0.3);
  std::uniform_real_distribution<double> eta_dist(0.2, 0.9);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PrivacyParams params{eps_dist(rng), delta_dist(rng)};
    const int d = 2 + i % 3;
    const KrausChannel a = BuildEpsDeltaMechanism(RandomEffect(d, rng), params);
    SearchBudget budget;
    budget.seed = static_cast<std::uint64_t>(i);
    if (!Certify(a, params, budget).certified) {
      Fail(o, Fmt("input %g not certified at its params", i));
      continue;
    }
    const PurifiedChannel out = PurifyDp(a, eta_dist(rng), params);
    const CertificationResult r = Certify(out.channel, {out.epsilon, 0.0}, budget);
    worst = std::max(worst, r.worst_value);
    if (!r.certified) Fail(o, Fmt("purified channel %g worst=%.3e", i, r.worst_value));
  }
  for (int i = 0; i < 20; ++i) {
    const double eps = eps_dist(rng);
    const double delta = std::min(delta_dist(rng), eps);
    const KrausChannel a = BuildQldpMechanism(RandomEffect(2 + i % 3, rng), eps);
    if (!Certify(a, {eps, 0.0}).certified || !Certify(a, RelaxPureDp(eps, delta)).certified) {
      Fail(o, Fmt("relaxation round trip fails at eps=%.4f delta=%.4f", eps, delta));
    }
  }
  if (o.pass) o.detail = Fmt("20 purified channels, max worst value %.3e; 20 relaxations", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 trace contraction tightness", TraceTightness},
      {"AC2 hockey-stick converse", HockeyConverse},
      {"AC3 (eps,delta) trace tightness", EpsDeltaTightness},
      {"AC4 Bures and relative-entropy contraction", BuresRelativeEntropy},
      {"AC5 f-divergence integral identity and skew symmetry", IntegralIdentity},
      {"AC6 pure-pair spectral lemma", SpectralLemma},
      {"AC7 orthogonal sample-complexity sandwich", OrthogonalSandwich},
      {"AC8 low-privacy regime", LowPrivacy},
      {"AC9 fairness and Holevo stability", Applications},
      {"AC10 purification and relaxation", Conversions},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
