#include <benchmark/benchmark.h>

#include "ranklab/hamming.hpp"
#include "ranklab/profiles.hpp"
#include "ranklab/ranksign_attack.hpp"
#include "ranklab/rsl.hpp"

using namespace ranklab;

static void SigningKeyRecovery(benchmark::State& state) {
    const LrpcParams p{1, 9, 8, 4, 2, 1, 1, 4};
    Rng krng(7);
    auto kp = ranksign_keygen(p, krng);
    uint64_t seed = 1;
    for (auto _ : state) {
        Rng rng(seed++);
        auto fk = attack_ranksign(kp.pk, Rank1Strategy::Enumerate, rng);
        benchmark::DoNotOptimize(fk.has_value());
    }
}
BENCHMARK(SigningKeyRecovery);

static void SupportLearning(benchmark::State& state) {
    const RslParams p{1, 10, 10, 3, 8, 2};
    uint64_t seed = 1;
    for (auto _ : state) {
        Rng rng(seed++);
        auto [inst, sec] = rsl_gen_instance(p, rng);
        auto got = rsl_attack(inst, RslStrategy::Exhaustive, rng);
        benchmark::DoNotOptimize(got.has_value());
    }
}
BENCHMARK(SupportLearning);

static void HammingBreak(benchmark::State& state) {
    auto hp = find_profile("desk-hamming")->hamming;
    uint64_t seed = 1;
    for (auto _ : state) {
        Rng rng(seed++);
        auto mpk = hamming_ibe_setup(hp, rng);
        std::vector<Fq> msg(hp.k_dec);
        for (auto& b : msg) b = rng.coin();
        auto ct = hamming_ibe_encrypt(mpk, "bench", msg, rng);
        auto res = break_hamming_ibe(mpk, "bench", ct, rng, 256);
        benchmark::DoNotOptimize(res.ok);
    }
}
BENCHMARK(HammingBreak);
