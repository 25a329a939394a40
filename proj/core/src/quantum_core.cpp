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

#include "qpriv/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpriv/error.hpp"

namespace qpriv {
namespace {

std::string Shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

// --- PureState ---------------------------------------------------------------

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "pure state of dimension 0");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kNorm) {
    throw Error(ErrorCode::kNotNormalized,
                "pure state norm " + std::to_string(amplitudes_.norm()));
  }
}

PureState PureState::Normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kNotNormalized, "cannot normalise a zero vector");
  }
  return PureState(v / n);
}

PureState PureState::Basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error(ErrorCode::kDimensionMismatch, "basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

double PureState::Overlap(const PureState& other) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "overlap of pure states");
  }
  return std::norm(amplitudes_.dot(other.amplitudes_));
}

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix DensityMatrix::FromMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "density matrix must be square, got " +
                                                   Shape(m.rows(), m.cols()));
  }
  if (!m.allFinite()) throw Error(ErrorCode::kNotPositive, "non-finite entries");
  if (!IsHermitian(m)) throw Error(ErrorCode::kNonHermitian, "density matrix");
  const double scale = std::max(1.0, MaxAbs(m));
  HermitianEigen eig = EigenDecompose(m);
  if (eig.values.minCoeff() < -tol::kPsd * scale) {
    throw Error(ErrorCode::kNotPositive,
                "min eigenvalue " + std::to_string(eig.values.minCoeff()));
  }
  const double trace = eig.values.sum();
  if (std::abs(trace - 1.0) > tol::kTrace * scale) {
    throw Error(ErrorCode::kNotNormalized, "trace " + std::to_string(trace));
  }
  RealVector clipped = eig.values.cwiseMax(0.0);
  clipped /= clipped.sum();
  Matrix out = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(Hermitize(out));
}

DensityMatrix DensityMatrix::Unchecked(Matrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::FromPure(const PureState& psi) {
  return DensityMatrix(psi.Projector());
}

DensityMatrix DensityMatrix::Diagonal(std::span<const double> probabilities) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(probabilities.size()),
                          static_cast<Eigen::Index>(probabilities.size()));
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probabilities[i];
  }
  return FromMatrix(m);
}

DensityMatrix DensityMatrix::MaximallyMixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  return DensityMatrix(Identity(dim) / static_cast<double>(dim));
}

// --- KrausChannel ------------------------------------------------------------

KrausChannel::KrausChannel(int dim_in, int dim_out, std::vector<Matrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (dim_in_ < 1 || dim_out_ < 1 || kraus_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel needs positive dims and Kraus operators");
  }
  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "Kraus operator " + Shape(k.rows(), k.cols()) + ", expected " +
                      Shape(dim_out_, dim_in_));
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double deviation = MaxAbs(sum - Identity(dim_in_));
  if (!(deviation <= tol::kTp)) {
    throw Error(ErrorCode::kNotTracePreserving,
                "||sum K^dag K - I||_max = " + std::to_string(deviation));
  }
}

Matrix KrausChannel::Apply(const Matrix& x) const {
  if (x.rows() != dim_in_ || x.cols() != dim_in_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel input " + Shape(x.rows(), x.cols()) + ", expected dim " +
                    std::to_string(dim_in_));
  }
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const Matrix& k : kraus_) out.noalias() += k * x * k.adjoint();
  return out;
}

Matrix KrausChannel::ApplyAdjoint(const Matrix& y) const {
  if (y.rows() != dim_out_ || y.cols() != dim_out_) {
    throw Error(ErrorCode::kDimensionMismatch, "adjoint channel input");
  }
  Matrix out = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus_) out.noalias() += k.adjoint() * y * k;
  return out;
}

Matrix KrausChannel::Choi() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_in_) * dim_out_;
  Matrix choi = Matrix::Zero(n, n);
  for (const Matrix& k : kraus_) {
    Eigen::Map<const Vector> v(k.data(), n);
    choi.noalias() += v * v.adjoint();
  }
  return choi;
}

KrausChannel KrausChannel::Compressed() const {
  const HermitianEigen eig = EigenDecompose(Choi());
  const double cutoff = 1e-14 * std::max(1.0, eig.values.maxCoeff());
  std::vector<Matrix> kraus;
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {
    if (eig.values(i) <= cutoff) break;
    Vector v = eig.vectors.col(i) * std::sqrt(eig.values(i));
    kraus.emplace_back(Eigen::Map<const Matrix>(v.data(), dim_out_, dim_in_));
  }
  // Renormalise the dropped round-off so the TP check stays tight.
  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus) sum.noalias() += k.adjoint() * k;
  const Matrix correction =
      ApplySpectralFunction(sum, [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
  for (Matrix& k : kraus) k = k * correction;
  return KrausChannel(dim_in_, dim_out_, std::move(kraus));
}

// --- Povm --------------------------------------------------------------------

Povm::Povm(int dim, std::vector<Matrix> effects) : dim_(dim), effects_(std::move(effects)) {
  if (dim_ < 1 || effects_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM needs a positive dimension and effects");
  }
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (Matrix& e : effects_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "POVM effect " + Shape(e.rows(), e.cols()));
    }
    if (!IsHermitian(e)) throw Error(ErrorCode::kNonHermitian, "POVM effect");
    e = Hermitize(e);
    if (Eigenvalues(e).minCoeff() < -tol::kPsd) {
      throw Error(ErrorCode::kNotAnEffect, "POVM effect is not PSD");
    }
    sum += e;
  }
  if (MaxAbs(sum - Identity(dim_)) > tol::kTp) {
    throw Error(ErrorCode::kNotAnEffect, "POVM effects do not sum to identity");
  }
}

std::vector<double> Povm::Probabilities(const Matrix& state) const {
  if (state.rows() != dim_ || state.cols() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM applied to a state of another dimension");
  }
  std::vector<double> out;
  out.reserve(effects_.size());
  for (const Matrix& e : effects_) out.push_back((e * state).trace().real());
  return out;
}

// --- spectral primitives -----------------------------------------------------

Matrix PositivePart(const Matrix& a) {
  if (!IsHermitian(a)) throw Error(ErrorCode::kNonHermitian, "positive_part input");
  return ApplySpectralFunction(a, [](double x) { return x > 0.0 ? x : 0.0; });
}

Matrix PositiveEigenprojector(const Matrix& a) {
  const HermitianEigen eig = EigenDecompose(a);
  const double cutoff = 1e-13 * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  Matrix p = Matrix::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cutoff) p.noalias() += Projector(eig.vectors.col(i));
  }
  return p;
}

Matrix MatrixGeometricMean(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "geometric mean operands");
  }
  Matrix x = Hermitize(a);
  Matrix y = Hermitize(b);
  const double min_eig = std::min(Eigenvalues(x).minCoeff(), Eigenvalues(y).minCoeff());
  if (min_eig <= tol::kRegularization) {
    x += tol::kRegularization * Identity(static_cast<int>(x.rows()));
    y += tol::kRegularization * Identity(static_cast<int>(y.rows()));
  }
  const HermitianEigen ex = EigenDecompose(x);
  RealVector sqrt_vals = ex.values.cwiseMax(0.0).cwiseSqrt();
  RealVector inv_sqrt_vals = sqrt_vals.cwiseInverse();
  const Matrix x_half = ex.vectors * sqrt_vals.cast<Complex>().asDiagonal() * ex.vectors.adjoint();
  const Matrix x_neg_half =
      ex.vectors * inv_sqrt_vals.cast<Complex>().asDiagonal() * ex.vectors.adjoint();
  const Matrix inner = PsdSqrt(Hermitize(x_neg_half * y * x_neg_half));
  return Hermitize(x_half * inner * x_half);
}

PurePairSpectrum ComputePurePairSpectrum(const PureState& psi, const PureState& phi,
                                         double gamma) {
  if (!(gamma >= 1.0)) {
    throw Error(ErrorCode::kInvalidGamma, "pure_pair_spectrum needs gamma >= 1");
  }
  if (psi.dim() != phi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "pure_pair_spectrum operands");
  }
  const int d = psi.dim();
  if (d < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "pure_pair_spectrum needs dimension >= 2");
  }
  const Vector& u = phi.amplitudes();
  const Vector& w = psi.amplitudes();
  const Complex c = u.dot(w);  // <phi|psi>
  const double f = std::min(1.0, std::norm(c));

  // Orthonormal basis {phi, phi_perp} of a 2-dimensional subspace containing psi.
  Vector perp = w - c * u;
  if (perp.norm() < 1e-12) {
    // psi parallel to phi: pick any vector orthogonal to phi.
    int k = 0;
    for (int i = 1; i < d; ++i) {
      if (std::abs(u(i)) < std::abs(u(k))) k = i;
    }
    perp = Vector::Zero(d);
    perp(k) = 1.0;
    perp -= u.dot(perp) * u;
  }
  perp.normalize();
  Matrix basis(d, 2);
  basis.col(0) = u;
  basis.col(1) = perp;

  const Matrix reduced = basis.adjoint() * (psi.Projector() - gamma * phi.Projector()) * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Hermitize(reduced));

  // (gamma+1)^2 - 4 gamma F written as (gamma-1)^2 + 4 gamma (1-F) for accuracy.
  const double root = std::sqrt((gamma - 1.0) * (gamma - 1.0) + 4.0 * gamma * (1.0 - f));
  PurePairSpectrum out;
  out.gamma = gamma;
  out.fidelity = f;
  out.lambda1 = 0.5 * (root - (gamma - 1.0));
  out.lambda2 = 0.5 * (root + (gamma - 1.0));
  out.phi1 = (basis * solver.eigenvectors().col(1)).normalized();
  out.phi2 = (basis * solver.eigenvectors().col(0)).normalized();
  return out;
}

// --- channel constructors ----------------------------------------------------

KrausChannel IdentityChannel(int dim) { return KrausChannel(dim, dim, {Identity(dim)}); }

KrausChannel DepolarizingChannel(int dim, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "depolarizing p = " + std::to_string(p));
  }
  if (dim < 1) throw Error(ErrorCode::kDimensionMismatch, "depolarizing dimension");
  std::vector<Matrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * Identity(dim));
  if (p > 0.0) {
    const double amp = std::sqrt(p / dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        Matrix k = Matrix::Zero(dim, dim);
        k(i, j) = amp;
        kraus.push_back(std::move(k));
      }
    }
  }
  return KrausChannel(dim, dim, std::move(kraus));
}

void ValidateEffect(const Matrix& effect) {
  if (effect.rows() != effect.cols() || effect.rows() == 0) {
    throw Error(ErrorCode::kNotAnEffect, "effect must be square");
  }
  if (!IsHermitian(effect)) throw Error(ErrorCode::kNotAnEffect, "effect is not Hermitian");
  const RealVector ev = Eigenvalues(effect);
  if (ev.minCoeff() < -tol::kPsd || ev.maxCoeff() > 1.0 + tol::kPsd) {
    throw Error(ErrorCode::kNotAnEffect, "effect eigenvalues outside [0, 1]");
  }
}

KrausChannel MeasurementChannel(const Povm& povm) {
  const int d = povm.dim();
  const int k = povm.outcomes();
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(k) * d);
  for (int i = 0; i < k; ++i) {
    const Matrix root = PsdSqrt(povm.effects()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < d; ++j) {
      Matrix op = Matrix::Zero(k, d);
      op.row(i) = root.row(j);
      if (op.norm() > 0.0) kraus.push_back(std::move(op));
    }
  }
  return KrausChannel(d, k, std::move(kraus));
}

KrausChannel MeasurementChannelTwoOutcome(const Matrix& effect) {
  ValidateEffect(effect);
  const int d = static_cast<int>(effect.rows());
  const Matrix m = Hermitize(effect);
  Matrix clipped = ApplySpectralFunction(m, [](double x) { return std::clamp(x, 0.0, 1.0); });
  return MeasurementChannel(Povm(d, {clipped, Identity(d) - clipped}));
}

KrausChannel ReplacementChannel(int dim_in, const DensityMatrix& omega) {
  const HermitianEigen eig = EigenDecompose(omega.matrix());
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= 0.0) continue;
    const Vector col = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    for (int j = 0; j < dim_in; ++j) {
      Matrix op = Matrix::Zero(omega.dim(), dim_in);
      op.col(j) = col;
      kraus.push_back(std::move(op));
    }
  }
  // Absorb clipping round-off.
  Matrix sum = Matrix::Zero(dim_in, dim_in);
  for (const Matrix& k : kraus) sum.noalias() += k.adjoint() * k;
  const double scale = RealTrace(sum) / dim_in;
  for (Matrix& k : kraus) k /= std::sqrt(scale);
  return KrausChannel(dim_in, omega.dim(), std::move(kraus));
}

KrausChannel Compose(const KrausChannel& after, const KrausChannel& before) {
  if (after.dim_in() != before.dim_out()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "compose: after.dim_in " + std::to_string(after.dim_in()) +
                    " != before.dim_out " + std::to_string(before.dim_out()));
  }
  std::vector<Matrix> kraus;
  kraus.reserve(after.kraus().size() * before.kraus().size());
  for (const Matrix& a : after.kraus()) {
    for (const Matrix& b : before.kraus()) kraus.push_back(a * b);
  }
  KrausChannel out(before.dim_in(), after.dim_out(), std::move(kraus));
  if (out.kraus().size() >
      static_cast<std::size_t>(out.dim_in()) * static_cast<std::size_t>(out.dim_out())) {
    return out.Compressed();
  }
  return out;
}

DensityMatrix Apply(const KrausChannel& channel, const DensityMatrix& state) {
  Matrix out = Hermitize(channel.Apply(state.matrix()));
  const double trace = RealTrace(out);
  if (trace > 0.0) out /= trace;
  return DensityMatrix::Unchecked(std::move(out));
}

DensityMatrix TensorPower(const DensityMatrix& state, int n, int max_dense_dim) {
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "tensor power needs n >= 1");
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= state.dim();
  if (total > max_dense_dim) {
    throw Error(ErrorCode::kDimensionBudgetExceeded,
                std::to_string(state.dim()) + "^" + std::to_string(n) + " exceeds " +
                    std::to_string(max_dense_dim));
  }
  Matrix out = state.matrix();
  for (int i = 1; i < n; ++i) out = KroneckerProduct(out, state.matrix());
  return DensityMatrix::Unchecked(std::move(out));
}

}  // namespace qpriv
