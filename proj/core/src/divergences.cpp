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

#include "qpriv/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpriv/error.hpp"

namespace qpriv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalues of sigma at or below this are treated as its kernel.
constexpr double kKernelCutoff = 1e-13;

void CheckDims(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()));
  }
}

double PositiveTrace(const Matrix& a) {
  const RealVector ev = Eigenvalues(a);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::max(0.0, ev(i));
  return s;
}

// Restriction of rho to the support of sigma, whitened by sigma; plus the
// mass of rho outside that support.
struct Whitened {
  Matrix ratio;
  double leaked_mass = 0.0;
};

Whitened Whiten(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const HermitianEigen es = EigenDecompose(sigma.matrix());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) > kKernelCutoff) support.push_back(i);
  }
  const Matrix rotated = es.vectors.adjoint() * rho.matrix() * es.vectors;
  Whitened out;
  double inside = 0.0;
  const auto k = static_cast<Eigen::Index>(support.size());
  out.ratio.resize(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    inside += rotated(support[a], support[a]).real();
    for (Eigen::Index b = 0; b < k; ++b) {
      out.ratio(a, b) = rotated(support[a], support[b]) /
                        std::sqrt(es.values(support[a]) * es.values(support[b]));
    }
  }
  out.leaked_mass = std::max(0.0, RealTrace(rotated) - inside);
  return out;
}

double Xlogx(double x) { return x > tol::kEntropyFloor ? x * std::log(x) : 0.0; }

}  // namespace

ConvexFunction KlFunction() {
  return {"kl", [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; },
          [](double x) { return 1.0 / x; }, true};
}

ConvexFunction ChiSquareFunction() {
  return {"chi2", [](double x) { return (x - 1.0) * (x - 1.0); },
          [](double) { return 2.0; }, true};
}

ConvexFunction LinearFunction() {
  return {"linear", [](double x) { return x - 1.0; }, [](double) { return 0.0; }, false};
}

ConvexFunction SmoothedTotalVariation(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::kInvalidParams, "smoothing must be positive");
  return {"smoothed_tv",
          [s](double x) { return 0.5 * (std::hypot(x - 1.0, s) - s); },
          [s](double x) {
            const double r = std::hypot(x - 1.0, s);
            return 0.5 * s * s / (r * r * r);
          },
          false};
}

void ValidateConvexFunction(const ConvexFunction& f, double eps_max) {
  if (!f.f || !f.f_pp) throw Error(ErrorCode::kInvalidParams, "convex function is empty");
  if (std::abs(f.f(1.0)) > 1e-12) {
    throw Error(ErrorCode::kInvalidParams, f.name + ": f(1) != 0");
  }
  const double hi = std::log(10.0 * std::exp(eps_max));
  const double lo = std::log(1e-6);
  constexpr int kGrid = 400;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / kGrid);
    if (f.f_pp(x) < -1e-9) {
      throw Error(ErrorCode::kInvalidParams, f.name + ": negative second derivative");
    }
  }
}

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  CheckDims(rho, sigma);
  return std::clamp(0.5 * Eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum(), 0.0, 1.0);
}

double Fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  CheckDims(rho, sigma);
  const Matrix prod = PsdSqrt(rho.matrix()) * PsdSqrt(sigma.matrix());
  Eigen::JacobiSVD<Matrix> svd(prod);
  const double s = svd.singularValues().sum();
  return std::clamp(s * s, 0.0, 1.0);
}

double BuresSquared(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::clamp(2.0 * (1.0 - std::sqrt(Fidelity(rho, sigma))), 0.0, 2.0);
}

double HockeyStick(const DensityMatrix& rho, const DensityMatrix& sigma, double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidGamma, "hockey-stick needs finite gamma >= 1");
  }
  CheckDims(rho, sigma);
  return std::clamp(PositiveTrace(rho.matrix() - gamma * sigma.matrix()), 0.0, 1.0);
}

double HockeyStickExtended(const DensityMatrix& rho, const DensityMatrix& sigma, double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidGamma, "extended hockey-stick needs finite gamma >= 0");
  }
  if (gamma >= 1.0) return HockeyStick(rho, sigma, gamma);
  CheckDims(rho, sigma);
  const double v = PositiveTrace(rho.matrix() - gamma * sigma.matrix()) - (1.0 - gamma);
  return std::max(0.0, v);
}

double RelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  CheckDims(rho, sigma);
  const HermitianEigen er = EigenDecompose(rho.matrix());
  const HermitianEigen es = EigenDecompose(sigma.matrix());
  // overlap(i, j) = |<r_i|s_j>|^2
  const Eigen::MatrixXd overlap = (er.vectors.adjoint() * es.vectors).cwiseAbs2();
  double leaked = 0.0;
  double cross = 0.0;
  double self = 0.0;
  for (Eigen::Index i = 0; i < er.values.size(); ++i) {
    const double p = std::max(0.0, er.values(i));
    if (p <= tol::kEntropyFloor) continue;
    self += Xlogx(p);
    for (Eigen::Index j = 0; j < es.values.size(); ++j) {
      const double w = p * overlap(i, j);
      if (es.values(j) > kKernelCutoff) {
        cross += w * std::log(es.values(j));
      } else {
        leaked += w;
      }
    }
  }
  if (leaked > tol::kSupp) return kInf;
  return std::max(0.0, self - cross);
}

RealVector LikelihoodRatios(const DensityMatrix& rho, const DensityMatrix& sigma) {
  CheckDims(rho, sigma);
  const Whitened w = Whiten(rho, sigma);
  if (w.ratio.rows() == 0) return RealVector();
  return Eigenvalues(w.ratio);
}

double MaxRelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  CheckDims(rho, sigma);
  const Whitened w = Whiten(rho, sigma);
  if (w.leaked_mass > tol::kSupp || w.ratio.rows() == 0) return kInf;
  const double top = Eigenvalues(w.ratio).maxCoeff();
  return top > 0.0 ? std::max(0.0, std::log(top)) : 0.0;
}

double FDivergence(const DensityMatrix& rho, const DensityMatrix& sigma, const ConvexFunction& f,
                   const QuadratureOptions& options) {
  CheckDims(rho, sigma);
  const double dmax_fwd = MaxRelativeEntropy(rho, sigma);
  const double dmax_bwd = MaxRelativeEntropy(sigma, rho);
  if (std::isinf(dmax_fwd) && f.growth_superlinear) return kInf;

  // One-sided integral int_1^{r} w(g) E_g(a||b) dg, in u = ln g when r is
  // finite and in t = 1/g when it is not.
  auto side = [&](const DensityMatrix& a, const DensityMatrix& b, double dmax,
                  const std::function<double(double)>& weight) {
    if (dmax <= 0.0) return 0.0;
    const RealVector ratios = LikelihoodRatios(a, b);
    const Matrix am = a.matrix();
    const Matrix bm = b.matrix();
    auto hockey = [&](double g) { return PositiveTrace(am - g * bm); };
    std::vector<double> points;
    if (std::isfinite(dmax)) {
      points = {0.0, dmax};
      for (Eigen::Index i = 0; i < ratios.size(); ++i) {
        if (ratios(i) > 1.0) points.push_back(std::min(dmax, std::log(ratios(i))));
      }
      return IntegratePiecewise(
                 [&](double u) {
                   const double g = std::exp(u);
                   return weight(g) * hockey(g) * g;
                 },
                 points, options)
          .value;
    }
    points = {0.0, 1.0};
    for (Eigen::Index i = 0; i < ratios.size(); ++i) {
      if (ratios(i) > 1.0) points.push_back(1.0 / ratios(i));
    }
    return IntegratePiecewise(
               [&](double t) {
                 const double g = 1.0 / t;
                 return weight(g) * hockey(g) * g * g;
               },
               points, options)
        .value;
  };

  const double forward = side(rho, sigma, dmax_fwd, [&](double g) { return f.f_pp(g); });
  const double backward = side(sigma, rho, dmax_bwd, [&](double g) {
    return f.f_pp(1.0 / g) / (g * g * g);
  });
  return forward + backward;
}

SkewSymmetry SkewSymmetryCheck(const DensityMatrix& rho, const DensityMatrix& sigma,
                               double gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::kInvalidGamma, "skew symmetry needs gamma > 0");
  return {HockeyStickExtended(rho, sigma, gamma),
          gamma * HockeyStickExtended(sigma, rho, 1.0 / gamma)};
}

double VonNeumannEntropy(const DensityMatrix& rho) {
  const RealVector ev = Eigenvalues(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s -= Xlogx(ev(i));
  return std::max(0.0, s);
}

}  // namespace qpriv
