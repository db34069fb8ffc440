#include <benchmark/benchmark.h>

#include "sk2/arith.hpp"
#include "sk2/heckeop.hpp"
#include "sk2/jacobi.hpp"
#include "sk2/maass.hpp"
#include "sk2/qseries.hpp"
#include "sk2/quad.hpp"

using namespace sk2;

namespace {

void BM_Delta(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        QSeries d = delta(n);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Delta)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity();

void BM_SeriesMul(benchmark::State& state) {
    const long n = state.range(0);
    QSeries e4 = eisenstein(4, n);
    QSeries e6 = eisenstein(6, n);
    for (auto _ : state) {
        QSeries p = e4.mul(e6, n);
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_CohenTable(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        std::vector<Rat> row = cohen_table(3, n);
        benchmark::DoNotOptimize(row);
    }
}
BENCHMARK(BM_CohenTable)->Arg(500)->Arg(2000);

void BM_Lift(benchmark::State& state) {
    const long detmax4 = state.range(0);
    JacobiIndex1Form phi = cusp_form_10_12(10, detmax4);
    for (auto _ : state) {
        SiegelExpansion f = sk_lift(phi, detmax4);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(detmax4);
}
BENCHMARK(BM_Lift)->Arg(400)->Arg(1600)->Arg(3600)->Arg(8836)->Complexity();

void BM_Reduce(benchmark::State& state) {
    std::vector<HalfIntMatrix> batch;
    const Unimodular shear{1, 1, 0, 1};
    const Unimodular rot{0, -1, 1, 0};
    unsigned seed = 12345;
    for (const HalfIntMatrix& t : canonical_keys(400)) {
        Unimodular u;
        for (int step = 0; step < 8; ++step) {
            seed = seed * 1664525u + 1013904223u;
            u = u.mul((seed >> 16) % 2 ? shear : rot);
        }
        batch.push_back(transform(t, u));
    }
    for (auto _ : state)
        for (const HalfIntMatrix& t : batch) benchmark::DoNotOptimize(reduce(t));
    state.SetItemsProcessed(static_cast<long>(state.iterations()) *
                            static_cast<long>(batch.size()));
}
BENCHMARK(BM_Reduce);

void BM_Decompose(benchmark::State& state) {
    std::vector<HalfIntMatrix> batch = canonical_keys(state.range(0));
    for (auto _ : state)
        for (const HalfIntMatrix& t : batch) benchmark::DoNotOptimize(decompose(t));
    state.SetItemsProcessed(static_cast<long>(state.iterations()) *
                            static_cast<long>(batch.size()));
}
BENCHMARK(BM_Decompose)->Arg(400)->Arg(1600);

void BM_ApplyTp(benchmark::State& state) {
    const long p = state.range(0);
    static const SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, 3600), 3600);
    for (auto _ : state) {
        SiegelExpansion out = apply_tp(l10, p);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_ApplyTp)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
