// Copyright 2026 The entpower Authors
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

#include "entpower/haar.hpp"
#include "entpower/omega.hpp"
#include "entpower/search.hpp"

using namespace entpower;

namespace {

Unitary bench_unitary(int d) {
    RngStream s(7, 0);
    return random_bipartite_unitary(d, s);
}

constexpr std::int64_t kSamples = 20000;

void BM_entangling_reference(benchmark::State &state) {
    const Unitary u = bench_unitary(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::mc_entangling_power(u, kSamples, 1).mean);
    state.SetItemsProcessed(state.iterations() * kSamples);
}

void BM_entangling_parallel(benchmark::State &state) {
    const Unitary u = bench_unitary(static_cast<int>(state.range(0)));
    const ExecPolicy policy{static_cast<int>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(mc_entangling_power(u, kSamples, 1, policy).mean);
    state.SetItemsProcessed(state.iterations() * kSamples);
}

void BM_disentangling_reference(benchmark::State &state) {
    const Unitary u = bench_unitary(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::mc_disentangling_power(u, kSamples, 1).mean);
    state.SetItemsProcessed(state.iterations() * kSamples);
}

void BM_disentangling_parallel(benchmark::State &state) {
    const Unitary u = bench_unitary(static_cast<int>(state.range(0)));
    const ExecPolicy policy{static_cast<int>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(mc_disentangling_power(u, kSamples, 1, policy).mean);
    state.SetItemsProcessed(state.iterations() * kSamples);
}

void BM_omega_reference(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::mc_omega(2, kSamples, 1).mean(0, 0));
    state.SetItemsProcessed(state.iterations() * kSamples);
}

void BM_omega_parallel(benchmark::State &state) {
    const ExecPolicy policy{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mc_omega(2, kSamples, 1, policy).mean(0, 0));
    state.SetItemsProcessed(state.iterations() * kSamples);
}

SearchOptions search_options(benchmark::State &state) {
    SearchOptions o;
    o.d = 4;
    o.mode = static_cast<SearchMode>(state.range(0));
    o.budget = 20000;
    o.seed = 1;
    return o;
}

void BM_search_reference(benchmark::State &state) {
    const SearchOptions o = search_options(state);
    for (auto _ : state) benchmark::DoNotOptimize(reference::search(o).best_value);
}

void BM_search_parallel(benchmark::State &state) {
    const SearchOptions o = search_options(state);
    const ExecPolicy policy{static_cast<int>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(search(o, policy).best_value);
}

}  // namespace

BENCHMARK(BM_entangling_reference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_entangling_parallel)->ArgsProduct({{2, 3}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_disentangling_reference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_disentangling_parallel)->ArgsProduct({{2, 3}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_omega_reference)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_omega_parallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_search_reference)
    ->Arg(static_cast<int>(SearchMode::Random))
    ->Arg(static_cast<int>(SearchMode::HillClimb))
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_search_parallel)
    ->ArgsProduct({{static_cast<int>(SearchMode::Random), static_cast<int>(SearchMode::HillClimb)}, {1, 4}})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
