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

// Distinguishability measures between density matrices. All logarithms are
// natural; +infinity is a legitimate return value where noted.

#ifndef QPRIV_DIVERGENCES_HPP_
#define QPRIV_DIVERGENCES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "qpriv/quadrature.hpp"
#include "qpriv/quantum_core.hpp"

namespace qpriv {

struct ConvexFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> f_pp;
  // f(x)/x unbounded as x grows; decides whether an unbounded likelihood
  // ratio makes the divergence infinite.
  bool growth_superlinear = false;
};

ConvexFunction KlFunction();                       // x ln x
ConvexFunction ChiSquareFunction();                // (x - 1)^2
ConvexFunction LinearFunction();                   // x - 1
ConvexFunction SmoothedTotalVariation(double s);   // (sqrt((x-1)^2 + s^2) - s) / 2

// f(1) = 0 within 1e-12 and f'' >= -1e-9 on a log grid of (0, 10 e^eps_max).
// Throws InvalidParams otherwise.
void ValidateConvexFunction(const ConvexFunction& f, double eps_max);

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma);
double Fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double BuresSquared(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr[(rho - gamma sigma)_+] for gamma >= 1.
double HockeyStick(const DensityMatrix& rho, const DensityMatrix& sigma, double gamma);

// Any gamma >= 0; subtracts (1 - gamma) below gamma = 1.
double HockeyStickExtended(const DensityMatrix& rho, const DensityMatrix& sigma, double gamma);

double RelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma);
double MaxRelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Eigenvalues of sigma^{-1/2} rho sigma^{-1/2} on supp(sigma), ascending.
// These are the gamma values at which E_gamma(rho||sigma) has kinks.
RealVector LikelihoodRatios(const DensityMatrix& rho, const DensityMatrix& sigma);

double FDivergence(const DensityMatrix& rho, const DensityMatrix& sigma, const ConvexFunction& f,
                   const QuadratureOptions& options = {});

struct SkewSymmetry {
  double lhs = 0.0;  // E_gamma(rho||sigma)
  double rhs = 0.0;  // gamma E_{1/gamma}(sigma||rho)
};
SkewSymmetry SkewSymmetryCheck(const DensityMatrix& rho, const DensityMatrix& sigma,
                               double gamma);

// -Tr[rho ln rho] with eigenvalues floored at tol::kEntropyFloor.
double VonNeumannEntropy(const DensityMatrix& rho);

}  // namespace qpriv

#endif  // QPRIV_DIVERGENCES_HPP_
