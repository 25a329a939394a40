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

#include "qpriv/random.hpp"

#include <cmath>
#include <string>

#include "qpriv/error.hpp"

namespace qpriv {

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix ComplexGaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) * scale;
    }
  }
  return g;
}

PureState RandomPureState(int dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::kDimensionMismatch, "random pure state dimension");
  Vector v = ComplexGaussian(dim, 1, rng).col(0);
  while (v.norm() < 1e-300) v = ComplexGaussian(dim, 1, rng).col(0);
  return PureState::Normalized(v);
}

PureState RandomPureState(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return RandomPureState(dim, rng);
}

DensityMatrix RandomDensityMatrix(int dim, int rank, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::kDimensionMismatch, "random state dimension");
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::kInvalidRank,
                "rank " + std::to_string(rank) + " for dimension " + std::to_string(dim));
  }
  const Matrix g = ComplexGaussian(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= RealTrace(rho);
  return DensityMatrix::FromMatrix(Hermitize(rho));
}

DensityMatrix RandomDensityMatrix(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return RandomDensityMatrix(dim, rank, rng);
}

Matrix RandomUnitary(int dim, Rng& rng) {
  const Matrix g = ComplexGaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

KrausChannel RandomChannel(int dim_in, int dim_out, int kraus_count, Rng& rng) {
  if (dim_in < 1 || dim_out < 1 || kraus_count < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "random channel dimensions");
  }
  const int rows = kraus_count * dim_out;
  if (rows < dim_in) {
    throw Error(ErrorCode::kInvalidRank, "kraus_count * dim_out must be at least dim_in");
  }
  const Matrix g = ComplexGaussian(rows, dim_in, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix v = qr.householderQ() * Matrix::Identity(rows, dim_in);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_count));
  for (int k = 0; k < kraus_count; ++k) kraus.push_back(v.middleRows(k * dim_out, dim_out));
  return KrausChannel(dim_in, dim_out, std::move(kraus));
}

KrausChannel RandomChannel(int dim_in, int dim_out, int kraus_count, std::uint64_t seed) {
  Rng rng(seed);
  return RandomChannel(dim_in, dim_out, kraus_count, rng);
}

Matrix RandomEffect(int dim, Rng& rng) {
  const Matrix u = RandomUnitary(dim, rng);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  RealVector vals(dim);
  for (int i = 0; i < dim; ++i) vals(i) = uniform(rng);
  return Hermitize(u * vals.cast<Complex>().asDiagonal() * u.adjoint());
}

std::pair<Vector, Vector> RandomOrthonormalPair(int dim, Rng& rng) {
  if (dim < 2) throw Error(ErrorCode::kDimensionMismatch, "orthonormal pair needs dim >= 2");
  Vector a = RandomPureState(dim, rng).amplitudes();
  Vector b = ComplexGaussian(dim, 1, rng).col(0);
  b -= a.dot(b) * a;
  while (b.norm() < 1e-8) {
    b = ComplexGaussian(dim, 1, rng).col(0);
    b -= a.dot(b) * a;
  }
  b.normalize();
  return {std::move(a), std::move(b)};
}

}  // namespace qpriv
