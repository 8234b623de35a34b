// Copyright 2026 The superpose Authors
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

// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=Band
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "superpose/kernels.hpp"
#include "superpose/synthesize.hpp"

using namespace superpose;

namespace {

const SuperpositionChannel &ring_channel() {
    static const SuperpositionChannel ch = synthesize_channel({0.0, 0.0, 0.5, false});
    return ch;
}

template <auto Kernel>
void band(benchmark::State &state) {
    const SphereCircle circ{0.7, 2.2, 0.3, true};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(circ, 1e-2, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void violation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(0.9, 1e-2, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void superposable(benchmark::State &state) {
    const SuperpositionChannel &ch = ring_channel();
    const CPMap map(ch.kraus);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(map, ch.spec, 1e-3, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void scan(benchmark::State &state) {
    const SuperpositionChannel &ch = ring_channel();
    const CPMap map(ch.kraus);
    const auto g = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(map, ch.spec, ket0(), g, 1e-9));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(band<kernels::band_hits_serial>)->Name("Band/serial")->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(band<kernels::band_hits>)->Name("Band/omp")->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(violation<kernels::violation_hits_serial>)
    ->Name("Violation/serial")
    ->Arg(1 << 20)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(violation<kernels::violation_hits>)
    ->Name("Violation/omp")
    ->Arg(1 << 20)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(superposable<kernels::superposable_hits_serial>)
    ->Name("Superposable/serial")
    ->Arg(1 << 17)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(superposable<kernels::superposable_hits>)
    ->Name("Superposable/omp")
    ->Arg(1 << 17)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(scan<kernels::scan_grid_serial>)->Name("Scan/serial")->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<kernels::scan_grid>)->Name("Scan/omp")->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
