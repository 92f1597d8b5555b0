#include "pext/bell.hpp"
#include "pext/extremal.hpp"
#include "pext/oracle.hpp"
#include "pext/partition.hpp"
#include "pext/setfam.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BellTable(benchmark::State& state) {
  const int capacity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    pext::BellTable table(capacity);
    benchmark::DoNotOptimize(table.bell(capacity));
  }
}
BENCHMARK(BM_BellTable)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    pext::for_each_partition(n, [&](const pext::SetPartition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_GeneratedSize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = 2;
  const pext::BellTable table(n + 2);
  const pext::SetFamily generators = pext::h_family(t, n - t - 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(pext::generated_size(generators, table));
}
BENCHMARK(BM_GeneratedSize)->Arg(16)->Arg(24)->Arg(32)->Arg(48);

void BM_MValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const pext::BellTable table(n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(pext::m_value(n, n / 4, table).m_value);
}
BENCHMARK(BM_MValue)->Arg(32)->Arg(128)->Arg(400);

void BM_CliqueSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) {
    pext::SearchResult r = pext::max_t_intersecting(n, t, pext::SearchBudget{}, false);
    benchmark::DoNotOptimize(r.maximum);
  }
}
BENCHMARK(BM_CliqueSearch)->Args({5, 1})->Args({6, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
