// Copyright 2026 The qfibounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qfib/bounds.hpp"
#include "qfib/entanglement.hpp"
#include "qfib/fisher.hpp"
#include "qfib/rng.hpp"
#include "qfib/states.hpp"

using namespace qfib;

namespace {

TangentState make_tangent(int dim, std::uint64_t seed) {
    const DensityMatrix rho = sample_full_rank_density(dim, 0.02, seed);
    return sample_tangent(rho, 1.0, derive_seed(seed, 1, 0));
}

void BM_SldSpectral(benchmark::State& state) {
    const TangentState t = make_tangent(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sld_spectral(t));
    }
}
BENCHMARK(BM_SldSpectral)->Arg(4)->Arg(16)->Arg(64);

void BM_SldIntegralAuto(benchmark::State& state) {
    const TangentState t = make_tangent(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sld_integral_auto(t));
    }
}
BENCHMARK(BM_SldIntegralAuto)->Arg(4)->Arg(8);

void BM_Fidelity(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const DensityMatrix a = sample_mixed_ginibre(dim, dim, 3);
    const DensityMatrix b = sample_mixed_ginibre(dim, dim, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity(a, b));
    }
}
BENCHMARK(BM_Fidelity)->Arg(4)->Arg(16)->Arg(64);

void BM_QfiContinuityBound(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const TangentState a = make_tangent(dim, 11);
    const TangentState b = make_tangent(dim, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfi_continuity_bound(a, b));
    }
}
BENCHMARK(BM_QfiContinuityBound)->Arg(2)->Arg(4)->Arg(8);

void BM_EgPure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Eigen::VectorXcd psi = sample_haar_vector(1 << n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eg_pure(psi, n, 2, 8, 5));
    }
}
BENCHMARK(BM_EgPure)->Arg(2)->Arg(4)->Arg(6);

void BM_BatchBoundSuite(benchmark::State& state) {
    BatchConfig config;
    config.seed = 42;
    config.dims = {2, 3};
    config.samples = state.range(0);
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch_verify(config));
    }
}
BENCHMARK(BM_BatchBoundSuite)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
