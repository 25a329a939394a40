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

// Seeded samplers for states, effects and channels. Every sampler is a pure
// function of the generator state it is handed.

#ifndef QPRIV_RANDOM_HPP_
#define QPRIV_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>

#include "qpriv/quantum_core.hpp"

namespace qpriv {

using Rng = std::mt19937_64;

// splitmix64 mix of (seed, index); used to give each trial its own stream.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// Entries i.i.d. (N(0,1) + i N(0,1)) / sqrt(2).
Matrix ComplexGaussian(int rows, int cols, Rng& rng);

PureState RandomPureState(int dim, Rng& rng);
PureState RandomPureState(int dim, std::uint64_t seed);

// G G^dagger / Tr with G complex Gaussian dim x rank.
DensityMatrix RandomDensityMatrix(int dim, int rank, Rng& rng);
DensityMatrix RandomDensityMatrix(int dim, int rank, std::uint64_t seed);

// Haar unitary from the QR decomposition with phase correction.
Matrix RandomUnitary(int dim, Rng& rng);

// Random isometry dim_in -> kraus_count * dim_out cut into Kraus blocks.
// Requires kraus_count * dim_out >= dim_in.
KrausChannel RandomChannel(int dim_in, int dim_out, int kraus_count, Rng& rng);
KrausChannel RandomChannel(int dim_in, int dim_out, int kraus_count, std::uint64_t seed);

// U diag(u_i) U^dagger with Haar U and u_i uniform on [0, 1].
Matrix RandomEffect(int dim, Rng& rng);

// Two orthonormal vectors: a random unit vector and a Gram-Schmidt partner.
std::pair<Vector, Vector> RandomOrthonormalPair(int dim, Rng& rng);

}  // namespace qpriv

#endif  // QPRIV_RANDOM_HPP_
