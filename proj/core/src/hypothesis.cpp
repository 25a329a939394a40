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

#include "qpriv/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <string>

#include "qpriv/divergences.hpp"
#include "qpriv/error.hpp"

namespace qpriv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCommutator = 1e-10;
constexpr double kOrthogonalFidelity = 1e-14;
// Cap on multinomial types enumerated by the classical path.
constexpr double kMaxTypes = 2e7;

double LogChoose(long n, long k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void CheckAlpha(const HypothesisInstance& inst) {
  const double pq = inst.prior_p * inst.q();
  if (!(inst.alpha > 0.0 && inst.alpha < pq)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must lie in (0, pq)");
  }
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidParams, "epsilon must be positive and finite");
  }
}

double Ceil(double x) { return std::ceil(x - 1e-12); }

// Merge outcomes with equal likelihood ratio; min(p P^n, q Q^n) depends only
// on the product of ratios, so sums over merged classes are preserved.
ClassicalPair MergeEqualRatios(const ClassicalPair& in) {
  std::vector<std::pair<double, std::pair<double, double>>> items;
  for (std::size_t i = 0; i < in.p.size(); ++i) {
    const double a = std::max(0.0, in.p[i]);
    const double b = std::max(0.0, in.q[i]);
    if (a <= 0.0 && b <= 0.0) continue;
    const double key = b > 0.0 ? std::log(a > 0.0 ? a / b : 0.0) : kInf;
    items.push_back({a > 0.0 ? key : -kInf, {a, b}});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  ClassicalPair out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const bool same = i > 0 && (items[i].first == items[i - 1].first ||
                                std::abs(items[i].first - items[i - 1].first) < 1e-12);
    if (same) {
      out.p.back() += items[i].second.first;
      out.q.back() += items[i].second.second;
    } else {
      out.p.push_back(items[i].second.first);
      out.q.push_back(items[i].second.second);
    }
  }
  return out;
}

double LogOrNegInf(double x) { return x > 0.0 ? std::log(x) : -kInf; }

// sum over types c of multinomial(n; c) * min(p prod P^c, q prod Q^c).
double ClassicalErrorN(const ClassicalPair& pair, double prior_p, long n) {
  const ClassicalPair merged = MergeEqualRatios(pair);
  const std::size_t k = merged.p.size();
  if (k == 0) return 0.0;
  double types = 1.0;
  for (std::size_t j = 1; j < k; ++j) types = types * static_cast<double>(n + j) / j;
  if (types > kMaxTypes) {
    throw Error(ErrorCode::kDimensionBudgetExceeded,
                "classical path would enumerate " + std::to_string(types) + " types");
  }
  std::vector<double> lp(k), lq(k);
  for (std::size_t j = 0; j < k; ++j) {
    lp[j] = LogOrNegInf(merged.p[j]);
    lq[j] = LogOrNegInf(merged.q[j]);
  }
  const double lprior_p = std::log(prior_p);
  const double lprior_q = std::log1p(-prior_p);
  const double lfact_n = std::lgamma(static_cast<double>(n) + 1.0);

  std::vector<long> c(k, 0);
  double total = 0.0;
  // Enumerate compositions of n into k parts; the last part takes the rest.
  std::function<void(std::size_t, long, double, double, double)> rec =
      [&](std::size_t j, long remaining, double lmult, double sp, double sq) {
        if (j + 1 == k) {
          const double cnt = static_cast<double>(remaining);
          const double m = lmult - std::lgamma(cnt + 1.0);
          const double tp = remaining > 0 ? sp + cnt * lp[j] : sp;
          const double tq = remaining > 0 ? sq + cnt * lq[j] : sq;
          const double e = m + std::min(lprior_p + tp, lprior_q + tq);
          if (e > -kInf) total += std::exp(e);
          return;
        }
        for (long cj = 0; cj <= remaining; ++cj) {
          const double cnt = static_cast<double>(cj);
          const double tp = cj > 0 ? sp + cnt * lp[j] : sp;
          const double tq = cj > 0 ? sq + cnt * lq[j] : sq;
          if (tp == -kInf && tq == -kInf) break;
          rec(j + 1, remaining - cj, lmult - std::lgamma(cnt + 1.0), tp, tq);
        }
      };
  rec(0, n, lfact_n, 0.0, 0.0);
  return std::clamp(total, 0.0, 0.5);
}

// Matrix of M^{(x)m} restricted to the symmetric subspace of (C^2)^{(x)m}, in
// the orthonormal Dicke basis. Column j collects the coefficients of
// (M00 x + M10 y)^{m-j} (M01 x + M11 y)^j.
Matrix SymmetricPower(const Matrix& m2, int m) {
  Matrix out(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    std::vector<Complex> poly{Complex(1.0)};
    auto times = [&poly](Complex cx, Complex cy) {
      std::vector<Complex> next(poly.size() + 1, Complex(0.0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * cx;
        next[i + 1] += poly[i] * cy;
      }
      poly.swap(next);
    };
    for (int t = 0; t < m - j; ++t) times(m2(0, 0), m2(1, 0));
    for (int t = 0; t < j; ++t) times(m2(0, 1), m2(1, 1));
    for (int i = 0; i <= m; ++i) {
      const double scale = std::exp(0.5 * (LogChoose(m, j) - LogChoose(m, i)));
      out(i, j) = poly[i] * scale;
    }
  }
  return out;
}

// Qubits: (C^2)^{(x)n} splits into blocks Sym^{n-2k} (x) det^k, each repeated
// C(n,k) - C(n,k-1) times.
double QubitTraceNorm(const Matrix& r, const Matrix& s, double p, double q, long n) {
  const double det_r = std::max(0.0, r.determinant().real());
  const double det_s = std::max(0.0, s.determinant().real());
  double norm = 0.0;
  for (long k = 0; 2 * k <= n; ++k) {
    const double mult = std::exp(LogChoose(n, k)) - (k > 0 ? std::exp(LogChoose(n, k - 1)) : 0.0);
    const int m = static_cast<int>(n - 2 * k);
    const Matrix block = p * std::pow(det_r, k) * SymmetricPower(r, m) -
                         q * std::pow(det_s, k) * SymmetricPower(s, m);
    norm += std::round(mult) * Eigenvalues(Hermitize(block)).cwiseAbs().sum();
  }
  return norm;
}

struct Factor {
  Matrix f;  // columns sqrt(lambda_i) v_i
  Eigen::Index rank = 0;
};

Factor LowRankFactor(const Matrix& a) {
  const HermitianEigen e = EigenDecompose(a);
  const double cut = 1e-14 * std::max(1.0, e.values.maxCoeff());
  Factor out;
  out.f = Matrix(a.rows(), 0);
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) <= cut) continue;
    out.f.conservativeResize(Eigen::NoChange, out.f.cols() + 1);
    out.f.col(out.f.cols() - 1) = std::sqrt(e.values(i)) * e.vectors.col(i);
  }
  out.rank = out.f.cols();
  return out;
}

Matrix KroneckerPower(const Matrix& a, long n) {
  Matrix out = a;
  for (long i = 1; i < n; ++i) out = KroneckerProduct(out, a);
  return out;
}

// p R - q S = B D B^dagger with B = [F_R^{(x)n}, F_S^{(x)n}] and D = diag(p, -q);
// its nonzero spectrum is that of G^{1/2} D G^{1/2} with G = B^dagger B.
double GramTraceNorm(const Factor& r, const Factor& s, double p, double q, long n) {
  const Matrix grr = KroneckerPower(r.f.adjoint() * r.f, n);
  const Matrix grs = KroneckerPower(r.f.adjoint() * s.f, n);
  const Matrix gss = KroneckerPower(s.f.adjoint() * s.f, n);
  const Eigen::Index a = grr.rows();
  const Eigen::Index b = gss.rows();
  Matrix g(a + b, a + b);
  g << grr, grs, grs.adjoint(), gss;
  RealVector d(a + b);
  d.head(a).setConstant(p);
  d.tail(b).setConstant(-q);
  const Matrix root = PsdSqrt(g);
  return Eigenvalues(Hermitize(root * d.cast<Complex>().asDiagonal() * root)).cwiseAbs().sum();
}

double DenseErrorN(const HypothesisInstance& inst, long n) {
  if (n > 64) {
    throw Error(ErrorCode::kDimensionBudgetExceeded, "too many copies for the dense path");
  }
  const double p = inst.prior_p;
  const double q = inst.q();
  const int dim = inst.rho.dim();
  double norm = 0.0;
  if (dim == 2) {
    norm = QubitTraceNorm(inst.rho.matrix(), inst.sigma.matrix(), p, q, n);
  } else {
    const Factor r = LowRankFactor(inst.rho.matrix());
    const Factor s = LowRankFactor(inst.sigma.matrix());
    const double reduced = std::pow(static_cast<double>(r.rank), static_cast<double>(n)) +
                           std::pow(static_cast<double>(s.rank), static_cast<double>(n));
    if (reduced < std::pow(static_cast<double>(dim), static_cast<double>(n))) {
      norm = GramTraceNorm(r, s, p, q, n);
    } else {
      const DensityMatrix a = TensorPower(inst.rho, static_cast<int>(n));
      const DensityMatrix b = TensorPower(inst.sigma, static_cast<int>(n));
      norm = Eigenvalues(p * a.matrix() - q * b.matrix()).cwiseAbs().sum();
    }
  }
  return std::clamp(0.5 * (1.0 - norm), 0.0, 0.5);
}

bool DenseFits(int dim, long n) {
  double total = 1.0;
  for (long i = 0; i < n; ++i) {
    total *= dim;
    if (total > tol::kMaxDenseDim) return false;
  }
  return true;
}

}  // namespace

void HypothesisInstance::Validate() const {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "hypotheses of different dimension");
  }
  if (!(prior_p > 0.0 && prior_p < 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "prior must lie in (0, 1)");
  }
  if (!(alpha > 0.0)) throw Error(ErrorCode::kInvalidAlpha, "alpha must be positive");
}

HypothesisInstance PushForward(const HypothesisInstance& inst, const KrausChannel& channel) {
  return {Apply(channel, inst.rho), Apply(channel, inst.sigma), inst.prior_p, inst.alpha};
}

std::string ToString(ScMethod method) {
  switch (method) {
    case ScMethod::kDense: return "dense";
    case ScMethod::kClassicalFastPath: return "classical_fastpath";
    case ScMethod::kBoundsOnly: return "bounds_only";
  }
  return "unknown";
}

std::optional<ClassicalPair> AsClassicalPair(const DensityMatrix& rho,
                                             const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorCode::kDimensionMismatch, "classical pair");
  const Matrix& a = rho.matrix();
  const Matrix& b = sigma.matrix();
  if (MaxAbs(a * b - b * a) > kCommutator) return std::nullopt;
  // Diagonalise rho, then sigma inside each degenerate eigenspace of rho.
  const HermitianEigen ea = EigenDecompose(a);
  const Eigen::Index d = ea.values.size();
  Matrix basis(d, d);
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d && ea.values(end) - ea.values(start) < 1e-10) ++end;
    const Matrix block = ea.vectors.middleCols(start, end - start);
    const HermitianEigen eb = EigenDecompose(block.adjoint() * b * block);
    basis.middleCols(start, end - start) = block * eb.vectors;
    start = end;
  }
  const Matrix da = basis.adjoint() * a * basis;
  const Matrix db = basis.adjoint() * b * basis;
  const double off = std::max(MaxAbs(da - Matrix(da.diagonal().asDiagonal())),
                              MaxAbs(db - Matrix(db.diagonal().asDiagonal())));
  if (off > 1e-9) return std::nullopt;
  ClassicalPair out;
  for (Eigen::Index i = 0; i < d; ++i) {
    out.p.push_back(std::max(0.0, da(i, i).real()));
    out.q.push_back(std::max(0.0, db(i, i).real()));
  }
  return out;
}

double HelstromError(const HypothesisInstance& inst) {
  inst.Validate();
  const double norm =
      Eigenvalues(inst.prior_p * inst.rho.matrix() - inst.q() * inst.sigma.matrix())
          .cwiseAbs()
          .sum();
  return std::clamp(0.5 * (1.0 - norm), 0.0, 0.5);
}

double HelstromErrorN(const HypothesisInstance& inst, long n, ErrorPath path) {
  inst.Validate();
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  if (path != ErrorPath::kDense) {
    if (auto pair = AsClassicalPair(inst.rho, inst.sigma)) {
      return ClassicalErrorN(*pair, inst.prior_p, n);
    }
    if (path == ErrorPath::kClassical) {
      throw Error(ErrorCode::kInvalidParams, "states do not commute");
    }
  }
  if (!DenseFits(inst.rho.dim(), n)) {
    throw Error(ErrorCode::kDimensionBudgetExceeded,
                "dim^n exceeds " + std::to_string(tol::kMaxDenseDim));
  }
  return DenseErrorN(inst, n);
}

SampleComplexityResult ExactSampleComplexity(const HypothesisInstance& inst, long n_max) {
  inst.Validate();
  if (TraceDistance(inst.rho, inst.sigma) < tol::kDenominator) {
    throw Error(ErrorCode::kUnbounded, "identical hypotheses are never distinguished");
  }
  auto bounds_only = [&] {
    SampleComplexityResult r;
    r.method = ScMethod::kBoundsOnly;
    r.lower = 1.0;
    r.upper = kInf;
    try {
      const SampleComplexityResult b = NonprivateScBounds(inst);
      r.lower = b.lower;
      r.upper = b.upper;
    } catch (const Error&) {
    }
    return r;
  };
  auto found = [](long n, ScMethod m) {
    SampleComplexityResult r;
    r.exact = n;
    r.lower = static_cast<double>(n);
    r.upper = static_cast<double>(n);
    r.method = m;
    return r;
  };

  if (const auto pair = AsClassicalPair(inst.rho, inst.sigma)) {
    auto err = [&](long n) { return ClassicalErrorN(*pair, inst.prior_p, n); };
    // The error is non-increasing in n: bracket by doubling, then bisect.
    long hi = 1;
    while (hi <= n_max && err(hi) > inst.alpha) {
      if (hi > n_max / 2) {
        hi = n_max + 1;
        break;
      }
      hi *= 2;
    }
    if (hi > n_max) {
      if (err(n_max) > inst.alpha) return bounds_only();
      hi = n_max;
    }
    long lo = hi / 2;  // err(lo) > alpha, or lo = 0
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (err(mid) <= inst.alpha) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return found(hi, ScMethod::kClassicalFastPath);
  }

  for (long n = 1; n <= n_max && DenseFits(inst.rho.dim(), n); ++n) {
    if (DenseErrorN(inst, n) <= inst.alpha) return found(n, ScMethod::kDense);
  }
  return bounds_only();
}

SampleComplexityResult NonprivateScBounds(const HypothesisInstance& inst) {
  inst.Validate();
  CheckAlpha(inst);
  const double pq = inst.prior_p * inst.q();
  const double f = Fidelity(inst.rho, inst.sigma);
  SampleComplexityResult r;
  r.method = ScMethod::kBoundsOnly;
  if (f <= kOrthogonalFidelity) {
    r.exact = 1;
    r.lower = 1.0;
    r.upper = 1.0;
    return r;
  }
  const double neg_log_f = -std::log(f);
  if (!(neg_log_f > 0.0)) {
    throw Error(ErrorCode::kDegenerateStates, "fidelity 1: states are identical");
  }
  const double db2 = BuresSquared(inst.rho, inst.sigma);
  r.lower = std::max(std::log(pq / inst.alpha) / neg_log_f,
                     (pq - inst.alpha * (1.0 - inst.alpha)) / (pq * db2));
  r.upper = Ceil(2.0 * std::log(std::sqrt(pq) / inst.alpha) / neg_log_f);
  return r;
}

SampleComplexityResult PrivateScBounds(const HypothesisInstance& inst, double epsilon) {
  inst.Validate();
  CheckEpsilon(epsilon);
  CheckAlpha(inst);
  const double t = TraceDistance(inst.rho, inst.sigma);
  if (t < tol::kDenominator) throw Error(ErrorCode::kDegenerateStates, "T(rho, sigma) = 0");
  const double pq = inst.prior_p * inst.q();
  const double e = std::exp(epsilon);
  const double factor = (e + 1.0) / ((e - 1.0) * t);
  const double half = std::expm1(0.5 * epsilon);
  const double c = std::max(std::log(pq / inst.alpha) * (e + 1.0) / (epsilon * (e - 1.0)),
                            (pq - inst.alpha * (1.0 - inst.alpha)) * (e + 1.0) /
                                (2.0 * pq * half * half));

  // Non-private sample complexity: exact where the classical path applies,
  // its analytic lower bound otherwise.
  double nonprivate = NonprivateScBounds(inst).lower;
  if (AsClassicalPair(inst.rho, inst.sigma)) {
    const SampleComplexityResult exact = ExactSampleComplexity(inst);
    if (exact.exact) nonprivate = static_cast<double>(*exact.exact);
  }
  SampleComplexityResult r;
  r.method = ScMethod::kBoundsOnly;
  r.lower = std::max(nonprivate, c / t);
  r.upper = Ceil(2.0 * std::log(std::sqrt(pq) / inst.alpha) * factor * factor);
  return r;
}

SampleComplexityResult OrthogonalScBounds(double epsilon, double p, double alpha) {
  CheckEpsilon(epsilon);
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::kInvalidProbability, "prior");
  const double pq = p * (1.0 - p);
  if (!(alpha > 0.0 && alpha < pq)) throw Error(ErrorCode::kInvalidAlpha, "alpha");
  const double e = std::exp(epsilon);
  const double ratio = (e + 1.0) / (e - 1.0);
  SampleComplexityResult r;
  r.method = ScMethod::kBoundsOnly;
  r.lower = (pq - alpha * (1.0 - alpha)) * ratio * ratio / (2.0 * pq);
  r.upper = Ceil(2.0 * std::log(std::sqrt(pq) / alpha) * ratio * ratio);
  return r;
}

SampleComplexityResult InstanceSpecificBounds(const HypothesisInstance& inst, double epsilon) {
  inst.Validate();
  CheckEpsilon(epsilon);
  CheckAlpha(inst);
  const double t = TraceDistance(inst.rho, inst.sigma);
  if (t < tol::kDenominator) throw Error(ErrorCode::kDegenerateStates, "T(rho, sigma) = 0");
  const double pq = inst.prior_p * inst.q();
  const double e = std::exp(epsilon);
  const double factor = (e + 1.0) / ((e - 1.0) * t);
  SampleComplexityResult r;
  r.method = ScMethod::kBoundsOnly;
  r.lower = std::log(pq / inst.alpha) / (e + 1.0) * factor * factor;
  r.upper = std::log(std::sqrt(pq) / inst.alpha) * factor * factor;
  return r;
}

bool WEpsMember(const KrausChannel& channel, const HypothesisInstance& inst, double epsilon,
                const SearchBudget& budget) {
  inst.Validate();
  const double floor = 1.0 / (std::exp(epsilon) + 1.0) - 1e-9;
  const double lam = std::max(Eigenvalues(Apply(channel, inst.rho).matrix()).minCoeff(),
                              Eigenvalues(Apply(channel, inst.sigma).matrix()).minCoeff());
  if (lam < floor) return false;
  return Certify(channel, {epsilon, 0.0}, budget).certified;
}

LowPrivacyReport LowPrivacyAnalysis(const HypothesisInstance& inst, double epsilon) {
  inst.Validate();
  const int d = inst.rho.dim();
  const Matrix sigma_inv = ApplySpectralFunction(
      inst.sigma.matrix(), [](double x) { return 1.0 / (std::max(0.0, x) + tol::kRegularization); });
  if (!sigma_inv.allFinite()) throw Error(ErrorCode::kSingularSigma, "sigma inverse");
  const Matrix g = MatrixGeometricMean(inst.rho.matrix(), sigma_inv);
  if (!g.allFinite()) throw Error(ErrorCode::kSingularSigma, "geometric mean");
  const HermitianEigen eig = EigenDecompose(g);

  std::vector<Matrix> effects;
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    const double scale = std::max(1.0, std::abs(eig.values(start)));
    while (end < d && eig.values(end) - eig.values(start) <= tol::kEigenvalueDistinct * scale) {
      ++end;
    }
    const Matrix block = eig.vectors.middleCols(start, end - start);
    effects.push_back(block * block.adjoint());
    start = end;
  }

  LowPrivacyReport r{static_cast<int>(effects.size()), 0.0, 1.0,
                     Povm(d, effects), 0.0, 0.0, false};
  r.bures_states = BuresSquared(inst.rho, inst.sigma);
  const std::vector<double> pa = r.measurement.Probabilities(inst.rho.matrix());
  const std::vector<double> pb = r.measurement.Probabilities(inst.sigma.matrix());
  double bc = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) bc += std::sqrt(std::max(0.0, pa[i] * pb[i]));
  r.bures_outcomes = std::clamp(2.0 * (1.0 - std::min(1.0, bc)), 0.0, 2.0);
  r.k_prime = r.bures_states > 0.0 ? std::log(4.0 / r.bures_states) : kInf;
  const double m = std::max(1.0, std::min(static_cast<double>(r.k), r.k_prime) / 2.0);
  r.L = m * m;
  const double th = std::tanh(0.5 * epsilon);
  r.condition_holds = r.bures_states > 0.0 && th * th >= 1.0 / r.bures_states;
  return r;
}

SampleComplexityResult MultipleHypothesisBounds(const std::vector<DensityMatrix>& states,
                                                const std::vector<double>& priors,
                                                double epsilon, double alpha) {
  CheckEpsilon(epsilon);
  const std::size_t m = states.size();
  if (m < 2 || priors.size() != m) {
    throw Error(ErrorCode::kInvalidParams, "need M >= 2 states with one prior each");
  }
  double total = 0.0;
  for (double p : priors) {
    if (!(p > 0.0)) throw Error(ErrorCode::kInvalidProbability, "priors must be positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidProbability, "priors must sum to 1");
  }
  if (!(alpha > 0.0)) throw Error(ErrorCode::kInvalidAlpha, "alpha must be positive");
  const double e = std::exp(epsilon);
  const double md = static_cast<double>(m);
  double lower = -kInf;
  double upper = -kInf;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double t = TraceDistance(states[i], states[j]);
      if (t < tol::kDenominator) {
        throw Error(ErrorCode::kDegeneratePair,
                    "states " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      const double pi = priors[i];
      const double pj = priors[j];
      lower = std::max(lower, std::log(pi * pj / ((pi + pj) * alpha)) * (e + 1.0) /
                                  (epsilon * (e - 1.0) * t));
      const double factor = (e + 1.0) / ((e - 1.0) * t);
      upper = std::max(upper, 2.0 * std::log(md * (md - 1.0) * std::sqrt(pi * pj) / (2.0 * alpha)) *
                                  factor * factor);
    }
  }
  SampleComplexityResult r;
  r.method = ScMethod::kBoundsOnly;
  r.lower = lower;
  r.upper = Ceil(upper);
  return r;
}

double AsymmetricLowerBound(double epsilon, double alpha1, double alpha2,
                            const BetaSearch& search) {
  CheckEpsilon(epsilon);
  if (!(alpha1 > 0.0 && alpha1 < 1.0 && alpha2 > 0.0 && alpha2 < 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha1, alpha2 must lie in (0, 1)");
  }
  auto branch = [&](double a, double b) {
    // beta >= 2/eps: denominator eps, numerator increasing in beta, so the
    // supremum there is the beta -> infinity limit.
    double best = std::log((1.0 - a) / b) / epsilon;
    const double beta_hi = 2.0 / epsilon;
    if (beta_hi <= 1.0) return best;
    auto value = [&](double x) {  // x = ln(beta - 1)
      const double beta = 1.0 + std::exp(x);
      const double bp = beta / (beta - 1.0);
      return (bp * std::log1p(-a) - std::log(b)) / std::min(epsilon, epsilon * epsilon * beta / 2.0);
    };
    const double x_lo = std::log(1e-9);
    const double x_hi = std::log(beta_hi - 1.0);
    const int n = std::max(2, search.grid_points);
    int arg = 0;
    double grid_best = -kInf;
    for (int i = 0; i <= n; ++i) {
      const double v = value(x_lo + (x_hi - x_lo) * i / n);
      if (v > grid_best) {
        grid_best = v;
        arg = i;
      }
    }
    double lo = x_lo + (x_hi - x_lo) * std::max(0, arg - 1) / n;
    double hi = x_lo + (x_hi - x_lo) * std::min(n, arg + 1) / n;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = value(c);
    double fd = value(d);
    for (int it = 0; it < search.polish_iterations && hi - lo > 1e-14; ++it) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - ratio * (hi - lo);
        fc = value(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + ratio * (hi - lo);
        fd = value(d);
      }
    }
    return std::max({best, grid_best, fc, fd});
  };
  return std::max(branch(alpha1, alpha2), branch(alpha2, alpha1));
}

double HeterogeneousMechanismLowerBound(const HypothesisInstance& inst, double epsilon) {
  inst.Validate();
  CheckEpsilon(epsilon);
  const double m = std::min(inst.prior_p, inst.q());
  if (inst.alpha > m) throw Error(ErrorCode::kAlphaTooLarge, "alpha exceeds min{p, q}");
  const double t = TraceDistance(inst.rho, inst.sigma);
  if (t < tol::kDenominator) throw Error(ErrorCode::kDegenerateStates, "T(rho, sigma) = 0");
  const double e = std::exp(epsilon);
  const double s = 1.0 - inst.alpha / m;
  return 2.0 * s * s * (e + 1.0) / (epsilon * (e - 1.0) * t);
}

}  // namespace qpriv
