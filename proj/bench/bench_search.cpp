// Serial reference kernels against the OpenMP kernels on the same inputs.
// Threads default to OMP_NUM_THREADS / the machine's core count.

#include "barker/certlab.hpp"
#include "barker/searchlab.hpp"

#include <benchmark/benchmark.h>

using namespace barker;

namespace {

void BM_ExhaustiveSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search::reference::exhaustive_search(n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_ExhaustiveParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search::exhaustive_search(n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_PrunedSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto rep = search::reference::pruned_search(n);
        nodes = rep.nodes_explored;
        benchmark::DoNotOptimize(rep);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_PrunedParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto rep = search::pruned_search(n);
        nodes = rep.nodes_explored;
        benchmark::DoNotOptimize(rep);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_PslSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search::reference::psl_search(n));
}

void BM_PslParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search::psl_search(n));
}

void BM_CertifyRange(benchmark::State& state) {
    const auto hi = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cert::certify_range(15, hi));
}

}  // namespace

BENCHMARK(BM_ExhaustiveSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrunedSerial)->Arg(21)->Arg(25)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrunedParallel)->Arg(21)->Arg(25)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PslSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PslParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyRange)->Arg(2001)->Arg(10001)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
