// Copyright 2026 The shadowkit Authors
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

// Serial reference kernels against their OpenMP counterparts. Each pair takes an
// argument of 0 (serial) or 1 (parallel) so the two rows sit side by side.

#include <benchmark/benchmark.h>

#include "shadowkit/acquisition.h"
#include "shadowkit/clifford_sampler.h"
#include "shadowkit/linear.h"
#include "shadowkit/nonlinear.h"

using namespace shadowkit;

namespace {

void BM_acquire_pauli(benchmark::State &state) {
    StateOracle s = StateOracle::stabilizer(ghz_state(20));
    AcquireOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(acquire_pauli(s, 5000, 1, opts));
    }
    state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK(BM_acquire_pauli)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_acquire_clifford(benchmark::State &state) {
    StateOracle s = StateOracle::stabilizer(ghz_state(20));
    AcquireOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(acquire_clifford(s, 1000, 1, opts));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_acquire_clifford)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_fidelity_estimates(benchmark::State &state) {
    StabilizerState ghz = ghz_state(20);
    ShadowDataset ds = acquire_clifford(StateOracle::stabilizer(ghz), 2000, 2);
    LinearTarget target = ghz;
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snapshot_estimates(ds, target, parallel));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_fidelity_estimates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_estimate_purity(benchmark::State &state) {
    ShadowDataset ds = acquire_pauli(StateOracle::stabilizer(ghz_state(10)), 20000, 3);
    std::vector<size_t> half = {0, 1, 2, 3, 4};
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_purity(ds, half, 10, parallel));
    }
}
BENCHMARK(BM_estimate_purity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_purity_accumulator(benchmark::State &state) {
    ShadowDataset ds = acquire_pauli(StateOracle::stabilizer(ghz_state(10)), static_cast<size_t>(state.range(0)), 4);
    std::vector<size_t> half = {0, 1, 2, 3, 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity_u_statistic(ds.pauli, half));
    }
}
BENCHMARK(BM_purity_accumulator)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_purity_naive(benchmark::State &state) {
    ShadowDataset ds = acquire_pauli(StateOracle::stabilizer(ghz_state(10)), static_cast<size_t>(state.range(0)), 4);
    std::vector<size_t> half = {0, 1, 2, 3, 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity_u_statistic_naive(ds.pauli, half));
    }
}
BENCHMARK(BM_purity_naive)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_random_clifford(benchmark::State &state) {
    RngStream rng(5);
    size_t n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_clifford(n, rng));
    }
}
BENCHMARK(BM_random_clifford)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
