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

// States, channels, measurements and the spectral primitives used by every
// bound in the library. All types are immutable values once constructed.

#ifndef QPRIV_QUANTUM_CORE_HPP_
#define QPRIV_QUANTUM_CORE_HPP_

#include <span>
#include <vector>

#include "qpriv/linalg.hpp"

namespace qpriv {

class PureState {
 public:
  // Requires | ||v|| - 1 | <= tol::kNorm.
  explicit PureState(Vector amplitudes);

  // Rescales any nonzero vector to unit norm.
  static PureState Normalized(const Vector& v);
  static PureState Basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Matrix Projector() const { return amplitudes_ * amplitudes_.adjoint(); }

  // |<this|other>|^2
  double Overlap(const PureState& other) const;

 private:
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity, positivity and unit trace within tolerance, then
  // re-symmetrises, clips negative eigenvalues and renormalises.
  static DensityMatrix FromMatrix(const Matrix& m);

  // Skips validation. Callers must already hold a state up to round-off,
  // e.g. the image of a state under a trace-preserving map.
  static DensityMatrix Unchecked(Matrix m);

  static DensityMatrix FromPure(const PureState& psi);
  static DensityMatrix Diagonal(std::span<const double> probabilities);
  static DensityMatrix MaximallyMixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

class KrausChannel {
 public:
  // Every operator must be dim_out x dim_in and sum K^dagger K = I within
  // tol::kTp.
  KrausChannel(int dim_in, int dim_out, std::vector<Matrix> kraus);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  // Schrodinger picture on an arbitrary dim_in x dim_in operator.
  Matrix Apply(const Matrix& x) const;
  // Heisenberg picture: sum K^dagger Y K.
  Matrix ApplyAdjoint(const Matrix& y) const;

  // Choi operator sum_i vec(K_i) vec(K_i)^dagger with column-major vec.
  Matrix Choi() const;

  // Equivalent channel with at most dim_in * dim_out Kraus operators, read off
  // the Choi spectrum.
  KrausChannel Compressed() const;

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Matrix> kraus_;
};

class Povm {
 public:
  Povm(int dim, std::vector<Matrix> effects);

  int dim() const { return dim_; }
  const std::vector<Matrix>& effects() const { return effects_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }

  std::vector<double> Probabilities(const Matrix& state) const;

 private:
  int dim_;
  std::vector<Matrix> effects_;
};

// psi psi^dagger - gamma phi phi^dagger = lambda1 phi1 phi1^dagger - lambda2 phi2 phi2^dagger.
struct PurePairSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Vector phi1;
  Vector phi2;
  double gamma = 1.0;
  double fidelity = 0.0;
};

// Sum of a_i |i><i| over the nonnegative eigenvalues a_i of a Hermitian A.
Matrix PositivePart(const Matrix& a);

// A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}. When either argument has
// an eigenvalue at or below tol::kRegularization the limit is approximated by
// (A + eps I) # (B + eps I) with eps = tol::kRegularization.
Matrix MatrixGeometricMean(const Matrix& a, const Matrix& b);

PurePairSpectrum ComputePurePairSpectrum(const PureState& psi, const PureState& phi,
                                         double gamma);

KrausChannel IdentityChannel(int dim);

// rho -> (1 - p) rho + p I / dim.
KrausChannel DepolarizingChannel(int dim, double p);

// omega -> Tr[M omega] |0><0| + Tr[(I - M) omega] |1><1|.
KrausChannel MeasurementChannelTwoOutcome(const Matrix& effect);

// omega -> sum_i Tr[M_i omega] |i><i|.
KrausChannel MeasurementChannel(const Povm& povm);

// rho -> Tr[rho] omega for a fixed output state.
KrausChannel ReplacementChannel(int dim_in, const DensityMatrix& omega);

// after o before; Kraus products, compressed when the count exceeds
// dim_in * dim_out.
KrausChannel Compose(const KrausChannel& after, const KrausChannel& before);

DensityMatrix Apply(const KrausChannel& channel, const DensityMatrix& state);

DensityMatrix TensorPower(const DensityMatrix& state, int n,
                          int max_dense_dim = tol::kMaxDenseDim);

// Checks 0 <= M <= I within tolerance; throws NotAnEffect otherwise.
void ValidateEffect(const Matrix& effect);

// Projector onto the eigenspace of the strictly positive eigenvalues of a
// Hermitian operator.
Matrix PositiveEigenprojector(const Matrix& a);

}  // namespace qpriv

#endif  // QPRIV_QUANTUM_CORE_HPP_
