#include <benchmark/benchmark.h>

#include <random>

#include "symtc/f2.hpp"

namespace {

symtc::F2Matrix random_matrix(int rows, int cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution bit(0.35);
    symtc::F2Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

void BM_Rref(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    symtc::F2Matrix m = random_matrix(n, n, 12345);
    for (auto _ : state) {
        symtc::F2Matrix c = m;
        benchmark::DoNotOptimize(symtc::rref(c));
    }
}
BENCHMARK(BM_Rref)->Arg(128)->Arg(512)->Arg(2048);

void BM_Kernel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    symtc::F2Matrix m = random_matrix(n / 2, n, 999);
    for (auto _ : state) benchmark::DoNotOptimize(symtc::kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(256)->Arg(1024);

}  // namespace
