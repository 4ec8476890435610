#include "qcount/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace qcount;

namespace {

void BM_SerialEnumerate(benchmark::State& state)
{
    const FieldCtx f(static_cast<std::uint32_t>(state.range(1)), 1);
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_counts(n, n - 1, f));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumeration_size(n, f.q())));
}

void BM_PartitionedEnumerate(benchmark::State& state)
{
    const FieldCtx f(static_cast<std::uint32_t>(state.range(1)), 1);
    const auto n = static_cast<unsigned>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(partitioned_enumerate(n, n - 1, f, workers));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumeration_size(n, f.q())));
}

} // namespace

// (n, p)
BENCHMARK(BM_SerialEnumerate)->Args({3, 3})->Args({4, 2})->Args({3, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
// (n, p, workers)
BENCHMARK(BM_PartitionedEnumerate)
    ->ArgsProduct({{3}, {3, 5}, {1, 2, 4, 8}})
    ->Args({4, 2, 1})
    ->Args({4, 2, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
