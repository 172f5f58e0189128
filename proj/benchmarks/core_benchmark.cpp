// Copyright 2026 The mzx Authors
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

#include "mzx/mzx.hpp"

namespace {

void BM_Emerge(benchmark::State &state) {
    const auto kind = static_cast<mzx::Preparation>(state.range(0));
    double phi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mzx::emerge(kind, mzx::PhaseShift(phi)));
        phi += 0.01;
    }
}
BENCHMARK(BM_Emerge)->Arg(0)->Arg(1);

void BM_SubensembleTable(benchmark::State &state) {
    double phi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mzx::subensemble_table(mzx::Preparation::entangled, mzx::PhaseShift(phi), mzx::PolarizerAngle(0.3)));
        phi += 0.01;
    }
}
BENCHMARK(BM_SubensembleTable);

void BM_Sample(benchmark::State &state) {
    const mzx::PathPolState out = mzx::emerge(mzx::Preparation::entangled, mzx::PhaseShift(0.7));
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    const mzx::SampleOptions options{mzx::kDefaultBlockSize, static_cast<unsigned>(state.range(1))};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mzx::sample(out, mzx::PolarizerAngle(0.3), shots, seed++, options));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_Sample)->Args({1 << 16, 1})->Args({1'000'000, 1})->Args({1'000'000, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
