#include <benchmark/benchmark.h>

#include "sstk/adjunction.hpp"
#include "sstk/homotopy.hpp"
#include "sstk/horn.hpp"
#include "sstk/necklace.hpp"

using namespace sstk;

static void BM_PlusConstruction(benchmark::State& state) {
    SemisimplicialSet X = restrict_sset(standard_simplex(static_cast<int>(state.range(0)), 5));
    for (auto _ : state) {
        PlusSet P = plus(X);
        benchmark::DoNotOptimize(P.sset().counts);
    }
}
BENCHMARK(BM_PlusConstruction)->Arg(1)->Arg(2)->Arg(3);

static void BM_HomologyPlusPoint(benchmark::State& state) {
    PlusSet P = plus(restrict_sset(standard_simplex(0, static_cast<int>(state.range(0)))));
    ChainComplex C = normalized_chains(P.sset());
    for (auto _ : state) {
        auto H = homology(C, C.top - 1);
        benchmark::DoNotOptimize(H);
    }
}
BENCHMARK(BM_HomologyPlusPoint)->Arg(6)->Arg(8);

static void BM_QuasicheckNervePlus(benchmark::State& state) {
    PlusSet P = plus(restrict_sset(nerve(FiniteCategory::poset_chain(2), 4)));
    for (auto _ : state) {
        QuasiReport r = quasicheck(P.sset(), static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.horns_checked);
    }
}
BENCHMARK(BM_QuasicheckNervePlus)->Arg(2)->Arg(3);

static void BM_CommaCategory(benchmark::State& state) {
    Localization loc = localization_pushout(1, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CommaCategory C = comma_category(loc.P, 0, 1,
                                         CommaBounds{static_cast<int>(state.range(0)),
                                                     static_cast<int>(state.range(0))});
        benchmark::DoNotOptimize(C.morphisms.size());
    }
}
BENCHMARK(BM_CommaCategory)->Arg(2)->Arg(3);

static void BM_MappingSpaceProbe(benchmark::State& state) {
    for (auto _ : state) {
        MappingSpaceProbe p = mapping_space_probe(1, 0, 1, 3, 2);
        benchmark::DoNotOptimize(p.pass);
    }
}
BENCHMARK(BM_MappingSpaceProbe);

BENCHMARK_MAIN();
