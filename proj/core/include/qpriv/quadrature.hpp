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

#ifndef QPRIV_QUADRATURE_HPP_
#define QPRIV_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace qpriv {

struct QuadratureOptions {
  double tolerance = 1e-7;
  // Bisection depth per piece; 13 levels is at most 8192 leaf panels.
  int max_depth = 13;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive 15-point Gauss-Kronrod over [points.front(), points.back()], split
// at every interior point so that kinks of the integrand fall on panel edges.
// Throws QuadratureNotConverged when the summed error estimate exceeds
// tolerance * max(1, integral of |f|).
QuadratureResult IntegratePiecewise(const std::function<double(double)>& f,
                                    std::vector<double> points,
                                    const QuadratureOptions& options = {});

}  // namespace qpriv

#endif  // QPRIV_QUADRATURE_HPP_
