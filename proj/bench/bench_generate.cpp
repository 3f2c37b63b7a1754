#include <benchmark/benchmark.h>

#include "mlc/engine.hpp"
#include "mlc/oracle.hpp"
#include "mlc/parallel.hpp"

namespace {

void BM_GenerateSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto start = mlc::Generator::default_start(n);
    for (auto _ : state) benchmark::DoNotOptimize(mlc::generate_serial(n, 1, start, mlc::cycle_length(n)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * mlc::cycle_length(n)));
}

void BM_GenerateParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto start = mlc::Generator::default_start(n);
    for (auto _ : state) benchmark::DoNotOptimize(mlc::generate_parallel(n, 1, start));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * mlc::cycle_length(n)));
}

void BM_VerifySerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto start = mlc::Generator::default_start(n);
    const auto flips = mlc::generate_serial(n, 1, start, mlc::cycle_length(n));
    for (auto _ : state) benchmark::DoNotOptimize(mlc::oracle::verify_flips(start, flips, n, 1));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * flips.size()));
}

void BM_VerifyParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto start = mlc::Generator::default_start(n);
    const auto block0 = mlc::generate_block(n, 1, start, 0);
    for (auto _ : state) benchmark::DoNotOptimize(mlc::oracle::verify_blocks_parallel(start, block0, n, 1));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * mlc::cycle_length(n)));
}

void BM_Step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    mlc::Generator g(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(g.next());
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

}  // namespace

BENCHMARK(BM_GenerateSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Step)->Arg(16)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
