#include <benchmark/benchmark.h>

#include <random>

#include "densewin/occ.hpp"
#include "densewin/scan.hpp"

using namespace densewin;

namespace {

// Sparse background occurrences with a dense burst every 100k time units.
OccList bursty_occ(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OccList occ;
    Timestamp t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool burst = (t / 100'000) % 2 == 1 && (t % 100'000) < 10'000;
        t += burst ? 1 + static_cast<Timestamp>(rng() % 100) : 500 + static_cast<Timestamp>(rng() % 5000);
        occ.push_back(t);
    }
    return occ;
}

void run_scan(benchmark::State& state, const ScanOptions& options) {
    const auto occ = bursty_occ(static_cast<std::size_t>(state.range(0)), 1);
    const std::vector<StartRange> ranges{unrestricted_range(1000, occ.back())};
    ScanStats stats;
    for (auto _ : state) {
        auto out = scan(occ, 1000, 9, ranges, options, &stats);
        benchmark::DoNotOptimize(out);
    }
    state.counters["evals/iter"] =
        static_cast<double>(stats.window_evals) / static_cast<double>(state.iterations());
}

void BM_ScanSkip(benchmark::State& state) { run_scan(state, ScanOptions{}); }
void BM_ScanUnitStep(benchmark::State& state) { run_scan(state, ScanOptions::unit_step()); }

void BM_OccIntersect(benchmark::State& state) {
    std::mt19937_64 rng(3);
    OccList a, b;
    for (Timestamp t = 0; t < 1'000'000; ++t) {
        if (rng() % 100 == 0) a.push_back(t);
        if (rng() % static_cast<std::uint64_t>(state.range(0)) == 0) b.push_back(t);
    }
    for (auto _ : state) {
        auto out = occ_intersect(a, b);
        benchmark::DoNotOptimize(out);
    }
}

}  // namespace

BENCHMARK(BM_ScanSkip)->Arg(1'000)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_ScanUnitStep)->Arg(1'000)->Arg(10'000);
BENCHMARK(BM_OccIntersect)->Arg(2)->Arg(100)->Arg(10'000);

BENCHMARK_MAIN();
