#include <benchmark/benchmark.h>

#include "ranklab/field.hpp"

using namespace ranklab;

static void FieldConstruction(benchmark::State& state) {
    unsigned a = static_cast<unsigned>(state.range(0));
    unsigned m = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        ExtField F(a, m);
        benchmark::DoNotOptimize(F.ext_modulus());
    }
}
BENCHMARK(FieldConstruction)->Args({1, 9})->Args({4, 9})->Args({32, 21});

static void ExtensionMul(benchmark::State& state) {
    auto F = ExtField::get(static_cast<unsigned>(state.range(0)),
                           static_cast<unsigned>(state.range(1)));
    Rng rng(1);
    Fqm x = F->random(rng), y = F->random(rng);
    for (auto _ : state) {
        x = F->mul(x, y);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(ExtensionMul)->Args({1, 9})->Args({4, 9})->Args({32, 21});

static void ExtensionInv(benchmark::State& state) {
    auto F = ExtField::get(static_cast<unsigned>(state.range(0)),
                           static_cast<unsigned>(state.range(1)));
    Rng rng(2);
    Fqm x = F->random(rng);
    if (F->is_zero(x)) x = F->one();
    for (auto _ : state) {
        x = F->inv(x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(ExtensionInv)->Args({4, 9})->Args({32, 21});
