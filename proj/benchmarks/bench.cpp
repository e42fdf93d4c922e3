#include <benchmark/benchmark.h>

#include "rauzy/bounds.hpp"

using namespace rauzy;

namespace {

void BM_FixedPointPrefix(benchmark::State& state) {
    Morphism m = Morphism::from_text("0->01;1->0");
    const size_t n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        Word w = fixed_point_prefix(m, 0, n);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_FixedPointPrefix)->Arg(100000)->Arg(1000000);

void BM_MechanicalPrefix(benchmark::State& state) {
    Quadratic slope(make_rational(3, 2), make_rational(-1, 2), 5);
    const size_t n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        Word w = mechanical_word_prefix(slope, slope, n);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_MechanicalPrefix)->Arg(10000)->Arg(100000);

void BM_BuildIndex(benchmark::State& state) {
    WordSource src = WordSource::morphism("0->01;1->10", '0');
    Word prefix = src.prefix(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        FactorIndex ix(prefix, 13, src.alphabet());
        benchmark::DoNotOptimize(ix.factors(13).size());
    }
}
BENCHMARK(BM_BuildIndex)->Arg(100000)->Arg(1000000);

void BM_ExactFrequencies(benchmark::State& state) {
    Morphism m = Morphism::from_text("0->01;1->0");
    const size_t n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        FrequencyAssignment a = exact_frequencies(m, 0, n);
        benchmark::DoNotOptimize(a.edge.size());
    }
}
BENCHMARK(BM_ExactFrequencies)->Arg(5)->Arg(15)->Arg(25);

void BM_BoundReport(benchmark::State& state) {
    WordSource src = WordSource::morphism("0->01;1->0", '0');
    AnalysisConfig config;
    config.prefix_length = 100000;
    for (auto _ : state) {
        BoundReport r = bound_report(src, static_cast<size_t>(state.range(0)), config);
        benchmark::DoNotOptimize(r.f);
    }
}
BENCHMARK(BM_BoundReport)->Arg(5)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
