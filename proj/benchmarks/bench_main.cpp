#include <benchmark/benchmark.h>

#include "eulerbrick/brick.hpp"
#include "eulerbrick/oracle.hpp"
#include "eulerbrick/ppt.hpp"
#include "eulerbrick/scanner.hpp"

using namespace eulerbrick;

static void BM_EnumerateOrdered(benchmark::State& state) {
  const u64 s_max = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    TripleStream stream(s_max);
    u64 rows = 0;
    while (stream.next()) ++rows;
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_EnumerateOrdered)->Arg(1000)->Arg(10000);

static void BM_BuildBricks(benchmark::State& state) {
  const auto rows = enumerate_ordered(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    std::size_t found = 0;
    for (const auto& r : rows) found += build_bricks_for(r.triple).size();
    benchmark::DoNotOptimize(found);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * rows.size()));
}
BENCHMARK(BM_BuildBricks)->Arg(500)->Arg(2000);

static void BM_Scan(benchmark::State& state) {
  ScanOptions opt;
  opt.s_max = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(opt).bricks_found());
}
BENCHMARK(BM_Scan)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_BruteForceBricks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_bricks(static_cast<u64>(state.range(0))).size());
}
BENCHMARK(BM_BruteForceBricks)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_ClassicalEnum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::classical_ppt_enum(static_cast<u64>(state.range(0))).size());
}
BENCHMARK(BM_ClassicalEnum)->Arg(100000);
BENCHMARK_MAIN();
