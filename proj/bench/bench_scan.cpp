#include "pk/verdict.hpp"

#include <benchmark/benchmark.h>

namespace {

const std::vector<pk::PretzelKnot>& knots() {
    static const std::vector<pk::PretzelKnot> ks = pk::odd_theorem_range(21, -61);
    return ks;
}

void BM_ScanSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pk::scan_serial(knots()));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(knots().size()));
}

void BM_ScanParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pk::scan_parallel(knots(), {}, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(knots().size()));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
