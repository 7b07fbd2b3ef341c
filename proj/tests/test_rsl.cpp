#include <doctest.h>

#include <sstream>

#include "ranklab/rsl.hpp"
#include "ranklab/serialize.hpp"

using namespace ranklab;

namespace {
const RslParams kDesk{1, 10, 10, 3, 8, 2};
}

TEST_CASE("instance generation: shapes, systematic form, noise regime") {
    Rng rng(1);
    auto [inst, sec] = rsl_gen_instance(kDesk, rng);
    CHECK(inst.A.rows() == 7);
    CHECK(inst.A.cols() == 10);
    CHECK(inst.B.rows() == 7);
    CHECK(inst.B.cols() == 8);
    CHECK(kDesk.N > kDesk.w * kDesk.k); // guaranteed low-rank regime
    const ExtField& F = *inst.field;
    // identity block up front
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j)
            CHECK(inst.A.at(i, j) == (i == j ? F.one() : F.zero()));
    // every entry of E lies in the secret space (B itself generally not)
    for (size_t i = 0; i < sec.E.rows(); ++i)
        for (size_t j = 0; j < sec.E.cols(); ++j) CHECK(sec.F.contains(sec.E.at(i, j)));
    CHECK(sec.F.dim() == kDesk.w);
    CHECK(theorem_bound(kDesk) == 2);
    CHECK(theorem_bound(RslParams{1, 10, 10, 3, 6, 2}) == 0);
}

TEST_CASE("the kernel construction from the proof yields the guaranteed dimension") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(100 + t);
        auto [inst, sec] = rsl_gen_instance(kDesk, rng);
        const ExtField& F = *inst.field;
        FqOps fq{F};
        size_t nk = kDesk.n - kDesk.k;
        // S = {e : E2 e^T = 0} with E2 the last k rows of E
        MatFq A(kDesk.k * F.m(), kDesk.N, 0);
        for (unsigned r = 0; r < kDesk.k; ++r)
            for (unsigned c = 0; c < kDesk.N; ++c)
                for (unsigned i = 1; i <= F.m(); ++i)
                    A.at(r * F.m() + (i - 1), c) = F.beta_coord(sec.E.at(nk + r, c), i);
        MatFq S = kernel_basis(fq, A);
        CHECK(static_cast<long>(S.rows()) >= theorem_bound(kDesk));
        // image vectors have every coordinate inside the secret space
        FqmOps fqm{F};
        for (size_t r = 0; r < S.rows(); ++r) {
            VecFqm c(nk, F.zero());
            for (unsigned col = 0; col < kDesk.N; ++col) {
                if (!S.at(r, col)) continue;
                for (size_t i = 0; i < nk; ++i) c[i] = F.add(c[i], inst.B.at(i, col));
            }
            for (const auto& x : c) CHECK(sec.F.contains(x));
        }
    }
}

TEST_CASE("built code: generators, dimension, parity") {
    int full_rank = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        Rng rng(300 + t);
        auto [inst, sec] = rsl_gen_instance(kDesk, rng);
        RslCode code = rsl_build_code(inst);
        if (!code.degenerate) ++full_rank;
        const ExtField& F = *inst.field;
        // every spanning row is annihilated by the parity check
        for (size_t g = 0; g < code.gen.rows(); ++g)
            for (size_t r = 0; r < code.parity.rows(); ++r) {
                Fq acc = 0;
                for (size_t c = 0; c < code.gen.cols(); ++c)
                    acc = F.fq_add(acc, F.fq_mul(code.parity.at(r, c), code.gen.at(g, c)));
                CHECK(acc == 0);
            }
    }
    CHECK(full_rank >= trials * 95 / 100);
}

TEST_CASE("exhaustive attack recovers the planted support") {
    int exact = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        Rng rng(500 + t);
        auto [inst, sec] = rsl_gen_instance(kDesk, rng);
        Rng arng(600 + t);
        auto got = rsl_attack(inst, RslStrategy::Exhaustive, arng);
        REQUIRE(got);
        CHECK(sec.F.contains_subspace(*got)); // soundness always
        if (*got == sec.F) ++exact;
    }
    CHECK(exact >= trials * 90 / 100);
    // the cap refuses oversized enumerations
    RslParams big{1, 30, 10, 3, 30, 2};
    Rng rng(1);
    auto [inst, sec] = rsl_gen_instance(big, rng);
    CHECK_THROWS_AS((void)rsl_attack(inst, RslStrategy::Exhaustive, rng),
                    std::invalid_argument);
}

TEST_CASE("bilinear attack is sound and usually lands") {
    int nonempty = 0, sound = 0;
    const int trials = 25;
    for (int t = 0; t < trials; ++t) {
        Rng rng(700 + t);
        auto [inst, sec] = rsl_gen_instance(kDesk, rng);
        Rng arng(800 + t);
        RslAttackReport rep;
        auto got = rsl_attack(inst, RslStrategy::Bilinear, arng, &rep);
        if (!got) continue;
        ++nonempty;
        if (sec.F.contains_subspace(*got)) ++sound;
    }
    CHECK(sound == nonempty); // soundness: every span sits inside the secret
    CHECK(nonempty >= trials * 6 / 10);
}

TEST_CASE("at the guarantee boundary low-rank words often vanish") {
    // N = w k: the dimension bound degenerates to zero; the absence of words
    // is a measured frequency, not a theorem
    RslParams boundary{1, 10, 10, 3, 6, 2};
    int without_words = 0, sound = 0, with_words = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        Rng rng(900 + t);
        auto [inst, sec] = rsl_gen_instance(boundary, rng);
        Rng arng(950 + t);
        auto got = rsl_attack(inst, RslStrategy::Exhaustive, arng);
        if (!got) {
            ++without_words;
            continue;
        }
        ++with_words;
        if (sec.F.contains_subspace(*got)) ++sound;
    }
    CHECK(without_words >= trials / 10); // clearly nonzero, unlike the guaranteed regime
    CHECK(sound == with_words);
}

TEST_CASE("encryption constraint reports") {
    // the repaired recipe passes the support-learning guard: 4 * 25 >= 96
    auto recipe = ibe_param_check(192, 100, 100, 75, 96, 4, 14, 4);
    CHECK(recipe.rsl_guard);
    CHECK(recipe.rsl_lhs == 100);
    CHECK(recipe.rsl_rhs == 96);
    CHECK(recipe.all_pass());
    CHECK_FALSE(recipe.gv_exact); // estimated at this size, and flagged

    // the published row fails it: 4 * 20 < 96
    auto table2 = ibe_param_check(192, 96, 100, 80, 96, 9, 10, 4);
    CHECK_FALSE(table2.rsl_guard);
    CHECK(table2.rsl_lhs == 80);
    CHECK(table2.rsl_rhs == 96);

    // zero noise weight: decoding trivially passes, the guard fails
    auto degen = ibe_param_check(4, 9, 9, 5, 12, 3, 3, 0);
    CHECK(degen.decoding);
    CHECK_FALSE(degen.rsl_guard);

    // desk-scale checks are exact
    auto desk = ibe_param_check(4, 9, 9, 5, 12, 3, 3, 1);
    CHECK(desk.gv_exact);
    CHECK(desk.sig_lower);
    CHECK(desk.sig_upper);
    CHECK(desk.decoding);
}

TEST_CASE("instance and secret files round trip") {
    Rng rng(31);
    auto [inst, sec] = rsl_gen_instance(kDesk, rng);
    std::ostringstream os;
    write_rsl_instance(os, inst);
    std::istringstream is(os.str());
    RslInstance back = read_rsl_instance(is);
    CHECK(back.A == inst.A);
    CHECK(back.B == inst.B);
    std::ostringstream os2;
    write_rsl_instance(os2, back);
    CHECK(os2.str() == os.str());

    std::ostringstream ss;
    write_rsl_secret(ss, *inst.field, sec);
    std::istringstream ss2(ss.str());
    RslSecret sback = read_rsl_secret(ss2, inst.field);
    CHECK(sback.F == sec.F);
    CHECK(sback.E == sec.E);
}
