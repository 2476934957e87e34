#include <benchmark/benchmark.h>

#include <map>

#include "densewin/miner.hpp"
#include "densewin/synthgen.hpp"

using namespace densewin;

namespace {

const synth::Generated& dataset(std::size_t transactions) {
    static std::map<std::size_t, synth::Generated> cache;
    auto it = cache.find(transactions);
    if (it == cache.end()) {
        synth::GenParams p;
        p.transactions = transactions;
        it = cache.emplace(transactions, synth::generate(p)).first;
    }
    return it->second;
}

void BM_MineFull(benchmark::State& state) {
    const auto& db = dataset(static_cast<std::size_t>(state.range(0))).db;
    for (auto _ : state) {
        auto result = mine(db, MiningParams{1000, 9});
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Generate(benchmark::State& state) {
    synth::GenParams p;
    p.transactions = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto g = synth::generate(p);
        benchmark::DoNotOptimize(g);
    }
}

}  // namespace

BENCHMARK(BM_MineFull)->Arg(100'000)->Arg(200'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generate)->Arg(100'000)->Unit(benchmark::kMillisecond);
