#include <benchmark/benchmark.h>

#include "holedyn/parallel.hpp"

using namespace holedyn;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_transitivity_batch(benchmark::State& state) {
    auto pairs = periodic_lw_pairs(6);
    for (auto _ : state) benchmark::DoNotOptimize(transitivity_batch(pairs, 0, mode(state)));
    state.SetLabel(std::to_string(pairs.size()) + " pairs, " + std::to_string(worker_threads()) + " threads");
}

void BM_bad_periods(benchmark::State& state) {
    Hole h{Q(2, 5), Q(3, 5)};
    for (auto _ : state) benchmark::DoNotOptimize(bad_periods(h, 18, mode(state)));
}

void BM_detect_renorm(benchmark::State& state) {
    LexPair p = LexPair::parse("|1101000", "|0001101");
    for (auto _ : state) benchmark::DoNotOptimize(detect_renorm(p, 0, mode(state)));
}

void BM_family_stages(benchmark::State& state) {
    const WordPair seed{"011", "100"};
    std::vector<LexPair> pairs{pair_from_assoc(seed)};
    for (const LexPair& p : build_nospec_family(seed, {{"01101", "1001"}, {"01", "10"}}, {{2, 2}, {2, 2}}, 2)) pairs.push_back(p);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_stages(pairs, {}, mode(state)));
}

}  // namespace

// argument 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_transitivity_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bad_periods)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_detect_renorm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_family_stages)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
