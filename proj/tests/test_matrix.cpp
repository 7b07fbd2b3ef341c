#include <doctest.h>

#include <functional>

#include "ranklab/matrix.hpp"

using namespace ranklab;

namespace {

// exhaustive minor-search rank oracle (feasible for 6x6)
size_t rank_by_minors(const ExtField& F, const MatFq& M) {
    FqOps ops{F};
    size_t best = 0;
    size_t n = M.rows(), m = M.cols();
    for (size_t size = 1; size <= std::min(n, m); ++size) {
        // walk all row and column subsets of the given size
        std::vector<size_t> rs(size), cs(size);
        std::function<bool(size_t, size_t)> walk_rows = [&](size_t idx, size_t from) {
            if (idx == size) {
                std::function<bool(size_t, size_t)> walk_cols = [&](size_t jdx, size_t cfrom) {
                    if (jdx == size) {
                        MatFq sub(size, size, 0);
                        for (size_t i = 0; i < size; ++i)
                            for (size_t j = 0; j < size; ++j) sub.at(i, j) = M.at(rs[i], cs[j]);
                        return rank_of(ops, sub) == size;
                    }
                    for (size_t c = cfrom; c < m; ++c) {
                        cs[jdx] = c;
                        if (walk_cols(jdx + 1, c + 1)) return true;
                    }
                    return false;
                };
                return walk_cols(0, 0);
            }
            for (size_t r = from; r < n; ++r) {
                rs[idx] = r;
                if (walk_rows(idx + 1, r + 1)) return true;
            }
            return false;
        };
        if (walk_rows(0, 0)) best = size;
    }
    return best;
}

} // namespace

TEST_CASE("rref on canonical inputs") {
    auto F = ExtField::get(1, 1);
    FqOps ops{*F};
    MatFq I = make_identity(ops, 5);
    auto rr = rref(ops, I);
    CHECK(rr.rank == 5);
    CHECK(rr.R == I);
    MatFq Z(4, 6, 0);
    auto rz = rref(ops, Z);
    CHECK(rz.rank == 0);
    CHECK(rz.R == Z);
}

TEST_CASE("rref is idempotent") {
    auto F = ExtField::get(2, 1);
    FqOps ops{*F};
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        MatFq M = random_matrix(ops, 5, 8, rng);
        auto r1 = rref(ops, M);
        auto r2 = rref(ops, r1.R);
        CHECK(r1.R == r2.R);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("forced rank-4 products have rank 4 (exhaustive minor oracle)") {
    auto F = ExtField::get(1, 1);
    FqOps ops{*F};
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        MatFq A(6, 4, 0), B(4, 6, 0);
        do A = random_matrix(ops, 6, 4, rng);
        while (rank_of(ops, A) != 4);
        do B = random_matrix(ops, 4, 6, rng);
        while (rank_of(ops, B) != 4);
        MatFq P = mat_mul(ops, A, B);
        CHECK(rank_of(ops, P) == 4);
        CHECK(rank_by_minors(*F, P) == 4);
    }
}

TEST_CASE("rank of a product never exceeds the factors") {
    auto F = ExtField::get(2, 1);
    FqOps ops{*F};
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        MatFq A = random_matrix(ops, 5, 7, rng);
        MatFq B = random_matrix(ops, 7, 6, rng);
        CHECK(rank_of(ops, mat_mul(ops, A, B)) <=
              std::min(rank_of(ops, A), rank_of(ops, B)));
    }
}

TEST_CASE("solve_linear: identity, inconsistent, and random systems") {
    auto F = ExtField::get(2, 1); // F_4
    FqOps ops{*F};
    Rng rng(17);

    MatFq I = make_identity(ops, 4);
    std::vector<Fq> b{1, 2, 3, 0};
    auto sol = solve_linear(ops, I, b);
    REQUIRE(sol);
    CHECK(sol->x == b);
    CHECK(sol->kernel.rows() == 0);

    MatFq Z(3, 4, 0);
    std::vector<Fq> nz{1, 0, 0};
    CHECK_FALSE(solve_linear(ops, Z, nz));

    for (int t = 0; t < 50; ++t) {
        MatFq A = random_matrix(ops, 5, 8, rng);
        std::vector<Fq> x0(8);
        for (auto& v : x0) v = ops.random(rng);
        std::vector<Fq> rhs = mat_vec(ops, A, x0);
        auto s = solve_linear(ops, A, rhs);
        REQUIRE(s);
        CHECK(mat_vec(ops, A, s->x) == rhs);
        // x0 - x must lie in the kernel span: check by solving for coordinates
        std::vector<Fq> diff(8);
        for (size_t i = 0; i < 8; ++i) diff[i] = ops.sub(x0[i], s->x[i]);
        if (s->kernel.rows() == 0) {
            for (Fq v : diff) CHECK(v == 0);
        } else {
            auto member = solve_linear(ops, transpose(s->kernel), diff);
            CHECK(member);
        }
    }
}

TEST_CASE("random_invertible basics and acceptance rate") {
    auto F2 = ExtField::get(1, 1);
    FqOps ops{*F2};
    Rng rng(19);
    CHECK(random_invertible(ops, 1, rng).at(0, 0) == 1);
    for (int t = 0; t < 100; ++t) {
        MatFq M = random_invertible(ops, 6, rng);
        CHECK(rank_of(ops, M) == 6);
        CHECK(try_inverse(ops, M));
    }
    // exactly 20160 of the 65536 binary 4x4 matrices are invertible
    int invertible = 0;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t)
        if (rank_of(ops, random_matrix(ops, 4, 4, rng)) == 4) ++invertible;
    double rate = static_cast<double>(invertible) / draws;
    double expect = 20160.0 / 65536.0;
    CHECK(std::abs(rate - expect) < 0.05);
}

TEST_CASE("lexmin_affine picks the smallest member under the priority order") {
    auto F = ExtField::get(1, 1);
    FqOps ops{*F};
    // space {00, 11} shifted by 10: members {10, 01}; priority (0,1) prefers 01
    MatFq K(1, 2, 0);
    K.at(0, 0) = 1;
    K.at(0, 1) = 1;
    std::vector<Fq> x0{1, 0};
    auto best = lexmin_affine(ops, x0, K, {0, 1});
    CHECK(best == std::vector<Fq>{0, 1});
    // reversed priority prefers 10
    best = lexmin_affine(ops, x0, K, {1, 0});
    CHECK(best == std::vector<Fq>{1, 0});
    // brute-force comparison on random affine spaces
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        MatFq Kr = random_matrix(ops, 3, 6, rng);
        std::vector<Fq> base(6);
        for (auto& v : base) v = ops.random(rng);
        std::vector<size_t> prio{2, 0, 5, 1, 4, 3};
        auto got = lexmin_affine(ops, base, Kr, prio);
        // walk all 8 combinations
        auto better = [&](const std::vector<Fq>& a, const std::vector<Fq>& b) {
            for (size_t p : prio) {
                if (a[p] != b[p]) return a[p] < b[p];
            }
            return false;
        };
        std::vector<Fq> best_brute = base;
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<Fq> v = base;
            for (int r = 0; r < 3; ++r)
                if (mask >> r & 1)
                    for (size_t c = 0; c < 6; ++c) v[c] ^= Kr.at(r, c);
            if (better(v, best_brute)) best_brute = v;
        }
        CHECK(got == best_brute);
    }
}
