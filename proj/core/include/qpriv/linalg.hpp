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

// Dense complex linear algebra shared by every module: matrix aliases,
// numerical tolerances and Hermitian spectral calculus.

#ifndef QPRIV_LINALG_HPP_
#define QPRIV_LINALG_HPP_

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qpriv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances. Hermiticity, trace and trace-preservation checks are
// relative to max(1, ||A||_max).
namespace tol {
inline constexpr double kHerm = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kTp = 1e-9;
inline constexpr double kPsd = 1e-8;
inline constexpr double kSpec = 1e-8;
inline constexpr double kNorm = 1e-9;
inline constexpr double kSupp = 1e-9;
inline constexpr double kRegularization = 1e-10;
inline constexpr double kEigenvalueDistinct = 1e-8;
inline constexpr double kDenominator = 1e-8;
inline constexpr double kEntropyFloor = 1e-15;
inline constexpr int kMaxDenseDim = 4096;
}  // namespace tol

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns are eigenvectors
};

double MaxAbs(const Matrix& a);

// ||A - A^dagger||_max <= tol * max(1, ||A||_max).
bool IsHermitian(const Matrix& a, double tolerance = tol::kHerm);

Matrix Hermitize(const Matrix& a);

// Symmetrises before decomposing; the input must be square.
HermitianEigen EigenDecompose(const Matrix& a);
RealVector Eigenvalues(const Matrix& a);

// f(A) = U f(Lambda) U^dagger for Hermitian A.
Matrix ApplySpectralFunction(const Matrix& a,
                             const std::function<double(double)>& f);

// Square root of a PSD matrix; negative eigenvalues are clipped to zero.
Matrix PsdSqrt(const Matrix& a);

double TraceNorm(const Matrix& a);

double RealTrace(const Matrix& a);

Matrix Identity(int dim);

// |v><v|
Matrix Projector(const Vector& v);

Matrix KroneckerProduct(const Matrix& a, const Matrix& b);

}  // namespace qpriv

#endif  // QPRIV_LINALG_HPP_
