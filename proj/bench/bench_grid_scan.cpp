// Copyright 2026 The su2wigner Authors
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

// Serial reference scan against the OpenMP scan on the figure grid.

#include <benchmark/benchmark.h>

#include "su2w/quasiprob.hpp"
#include "su2w/scan.hpp"

namespace {

const su2w::DensityMatrix& state() {
    static const su2w::DensityMatrix rho = su2w::accelerated_ghz(0.7, 2, 0.6);
    return rho;
}

void BM_GridScanSerial(benchmark::State& st) {
    const su2w::GridSpec grid{static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1))};
    for (auto _ : st) benchmark::DoNotOptimize(su2w::serial::grid_scan(state(), su2w::DistributionKind::Wigner, grid));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_GridScanOpenMP(benchmark::State& st) {
    const su2w::GridSpec grid{static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1))};
    for (auto _ : st) benchmark::DoNotOptimize(su2w::grid_scan(state(), su2w::DistributionKind::Wigner, grid));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid.size()));
}

}  // namespace

BENCHMARK(BM_GridScanSerial)->Args({91, 181})->Args({181, 361})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridScanOpenMP)->Args({91, 181})->Args({181, 361})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
