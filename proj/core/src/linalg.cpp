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

#include "qpriv/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qpriv/error.hpp"

namespace qpriv {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotTracePreserving: return "NotTracePreserving";
    case ErrorCode::kNotAnEffect: return "NotAnEffect";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case ErrorCode::kInvalidGamma: return "InvalidGamma";
    case ErrorCode::kGammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInvalidEta: return "InvalidEta";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kAlphaTooLarge: return "AlphaTooLarge";
    case ErrorCode::kDegenerateStates: return "DegenerateStates";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kSingularSigma: return "SingularSigma";
    case ErrorCode::kNoValidPairs: return "NoValidPairs";
    case ErrorCode::kQuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

double MaxAbs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool IsHermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, MaxAbs(a));
  return MaxAbs(a - a.adjoint()) <= tolerance * scale;
}

Matrix Hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

HermitianEigen EigenDecompose(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "eigendecomposition of a non-square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Hermitize(a));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector Eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Hermitize(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix ApplySpectralFunction(const Matrix& a,
                             const std::function<double(double)>& f) {
  const HermitianEigen eig = EigenDecompose(a);
  RealVector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = f(eig.values(i));
  return eig.vectors * mapped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Matrix PsdSqrt(const Matrix& a) {
  return ApplySpectralFunction(a, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

double TraceNorm(const Matrix& a) {
  if (a.rows() == a.cols() && IsHermitian(a, 1e-12)) {
    return Eigenvalues(a).cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

double RealTrace(const Matrix& a) { return a.trace().real(); }

Matrix Identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix Projector(const Vector& v) { return v * v.adjoint(); }

Matrix KroneckerProduct(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qpriv
