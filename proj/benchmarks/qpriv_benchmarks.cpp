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

#include <benchmark/benchmark.h>

#include <cmath>

#include "qpriv/contraction.hpp"
#include "qpriv/divergences.hpp"
#include "qpriv/hypothesis.hpp"
#include "qpriv/privacy.hpp"
#include "qpriv/random.hpp"

namespace {

using namespace qpriv;

void BM_HockeyStick(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const DensityMatrix a = RandomDensityMatrix(d, d, rng);
  const DensityMatrix b = RandomDensityMatrix(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(HockeyStick(a, b, 1.5));
}
BENCHMARK(BM_HockeyStick)->Arg(2)->Arg(4)->Arg(8)->Arg(32);

void BM_Fidelity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const DensityMatrix a = RandomDensityMatrix(d, d, rng);
  const DensityMatrix b = RandomDensityMatrix(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(32);

void BM_FDivergenceKl(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  const DensityMatrix a = RandomDensityMatrix(d, d, rng);
  const DensityMatrix b = RandomDensityMatrix(d, d, rng);
  const ConvexFunction f = KlFunction();
  for (auto _ : state) benchmark::DoNotOptimize(FDivergence(a, b, f));
}
BENCHMARK(BM_FDivergenceKl)->Arg(2)->Arg(3)->Arg(4);

void BM_Certify(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(4);
  const KrausChannel a = BuildQldpMechanism(RandomEffect(d, rng), std::log(3.0));
  for (auto _ : state) benchmark::DoNotOptimize(Certify(a, {std::log(3.0), 0.0}));
}
BENCHMARK(BM_Certify)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TraceScan(benchmark::State& state) {
  ScanConfig c;
  c.params = {1.0, 0.0};
  c.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(c).empirical_sup);
}
BENCHMARK(BM_TraceScan)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ClassicalSampleComplexity(benchmark::State& state) {
  const double a = 0.5 + 1.0 / static_cast<double>(state.range(0));
  const std::vector<double> pa{a, 1.0 - a};
  const std::vector<double> pb{1.0 - a, a};
  const HypothesisInstance inst{DensityMatrix::Diagonal(pa), DensityMatrix::Diagonal(pb), 0.5,
                                0.05};
  for (auto _ : state) benchmark::DoNotOptimize(ExactSampleComplexity(inst).exact);
}
BENCHMARK(BM_ClassicalSampleComplexity)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DenseHelstromQubit(benchmark::State& state) {
  Rng rng(5);
  const HypothesisInstance inst{RandomDensityMatrix(2, 2, rng), RandomDensityMatrix(2, 2, rng),
                                0.5, 0.1};
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(HelstromErrorN(inst, n, ErrorPath::kDense));
}
BENCHMARK(BM_DenseHelstromQubit)->Arg(4)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
