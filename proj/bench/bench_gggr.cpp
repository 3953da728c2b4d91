#include "ugggr/gggr.hpp"

#include <benchmark/benchmark.h>

using namespace ugggr;

static void BM_TableSerial(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Partition lam = partitions_of(n)[1];
    for (auto _ : st) benchmark::DoNotOptimize(gggr_table_serial(n, lam, Mode::canonical));
}

static void BM_TableParallel(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Partition lam = partitions_of(n)[1];
    for (auto _ : st) benchmark::DoNotOptimize(gggr_table(n, lam, Mode::canonical));
}

static void BM_CheckSerial(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(consistency_check_serial(n, Mode::canonical));
}

static void BM_CheckParallel(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(consistency_check(n, Mode::canonical));
}

BENCHMARK(BM_TableSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
