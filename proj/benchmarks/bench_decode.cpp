#include <benchmark/benchmark.h>

#include "ranklab/ranksign.hpp"

using namespace ranklab;

static void ErasureDecode(benchmark::State& state) {
    const LrpcParams p{4, 9, 8, 4, 2, 1, 1, 4};
    auto F = ExtField::get(p.a, p.m);
    Rng rng(5);
    Subspace coeff = canonical_unit_orbit(sample_subspace(F, p.d, true, rng));
    HomogeneousMatrix H = sample_homogeneous(F, p.n - p.k, p.n, coeff, rng);
    for (auto _ : state) {
        Subspace T = sample_subspace(F, 2, false, rng);
        VecFqm s(p.n - p.k, F->zero());
        for (auto& x : s) x = F->random(rng);
        auto e = lrpc_decode(H, s, T, p.w, rng);
        benchmark::DoNotOptimize(e.has_value());
    }
}
BENCHMARK(ErasureDecode);

static void SignVerify(benchmark::State& state) {
    const LrpcParams p{4, 9, 8, 4, 2, 1, 1, 4};
    Rng rng(6);
    auto kp = ranksign_keygen(p, rng);
    uint64_t n = 0;
    for (auto _ : state) {
        auto sig = ranksign_sign(kp.sk, "bench " + std::to_string(n++), rng);
        bool ok = sig && ranksign_verify(kp.pk, "bench " + std::to_string(n - 1), *sig);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(SignVerify);
