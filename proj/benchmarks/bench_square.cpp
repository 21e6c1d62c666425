#include <benchmark/benchmark.h>

#include "symtc/bounds.hpp"

namespace {

using namespace symtc;

SSetPtr sphere_sset(int n) {
    return std::make_shared<SimplicialSet>(to_simplicial_set(make_sphere(n)));
}

void BM_SymmetricSquare(benchmark::State& state) {
    SSetPtr x = sphere_sset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_square(x));
}
BENCHMARK(BM_SymmetricSquare)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SquareRings(benchmark::State& state) {
    SSetPtr x = sphere_sset(static_cast<int>(state.range(0)));
    EquivariantPair sq = symmetric_square(x);
    for (auto _ : state) benchmark::DoNotOptimize(build_square_rings(sq));
}
BENCHMARK(BM_SquareRings)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SphereBounds(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SSetPtr x = sphere_sset(n);
    for (auto _ : state) {
        SquareRings r = build_square_rings(x);
        benchmark::DoNotOptimize(bounds_report(r, n - 1, true, "sphere"));
    }
}
BENCHMARK(BM_SphereBounds)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
