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

#include "qpriv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qpriv/error.hpp"

namespace qpriv {

QuadratureResult IntegratePiecewise(const std::function<double(double)>& f,
                                    std::vector<double> points,
                                    const QuadratureOptions& options) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  QuadratureResult out;
  double l1_total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i];
    const double b = points[i + 1];
    if (!(b > a)) continue;
    double error = 0.0;
    double l1 = 0.0;
    const double piece = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, static_cast<unsigned>(options.max_depth), options.tolerance, &error, &l1);
    out.value += piece;
    out.error += error;
    l1_total += l1;
  }
  if (!std::isfinite(out.value) || out.error > options.tolerance * std::max(1.0, l1_total)) {
    throw Error(ErrorCode::kQuadratureNotConverged,
                "error estimate " + std::to_string(out.error) + " above tolerance");
  }
  return out;
}

}  // namespace qpriv
