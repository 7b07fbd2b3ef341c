#include <benchmark/benchmark.h>

#include "ranklab/matrix.hpp"

using namespace ranklab;

static void RrefBaseField(benchmark::State& state) {
    auto F = ExtField::get(static_cast<unsigned>(state.range(0)), 1);
    FqOps ops{*F};
    Rng rng(3);
    size_t n = static_cast<size_t>(state.range(1));
    MatFq M = random_matrix(ops, n, 2 * n, rng);
    for (auto _ : state) {
        auto rr = rref(ops, M);
        benchmark::DoNotOptimize(rr.rank);
    }
}
BENCHMARK(RrefBaseField)->Args({1, 32})->Args({1, 72})->Args({4, 32});

static void KernelExtension(benchmark::State& state) {
    auto F = ExtField::get(4, 9);
    FqmOps ops{*F};
    Rng rng(4);
    MatFqm M = random_matrix(ops, 4, 9, rng);
    for (auto _ : state) {
        auto K = kernel_basis(ops, M);
        benchmark::DoNotOptimize(K.rows());
    }
}
BENCHMARK(KernelExtension);
