#include <doctest.h>

#include <set>
#include <sstream>

#include "ranklab/bilinear.hpp"
#include "ranklab/ranksign_attack.hpp"

using namespace ranklab;

TEST_CASE("proposition census formulas at the published parameter rows") {
    auto c1 = ranksign_system_counts(20, 10, 21, 2);
    CHECK(c1.equations == 200);
    CHECK(c1.unknowns == 42);
    auto c2 = rsl_system_counts(100, 80, 96, 4);
    CHECK(c2.equations == 7716);
    CHECK(c2.unknowns == 704);
}

TEST_CASE("built desk systems match the census formulas") {
    // q = 16 keeps the univariate quadratic constraint in play, matching the
    // counting convention that includes every fixing as one equation
    LrpcParams p{4, 9, 8, 4, 2, 1, 1, 4};
    Rng rng(1);
    auto kp = ranksign_keygen(p, rng);
    auto proj = build_proj_code(kp.pk);
    CHECK(proj.parity.rows() == 27); // (m-1)(n+t) - (k+t)m
    CHECK(proj.parity.cols() == 72);

    BilinearSystem sys = model_rank_w(p.a, proj.parity, 8, 9, 1);
    CHECK(sys.eqs.size() == 27);
    apply_ranksign_fixings(sys, p.n, p.d, 2, 7);
    auto expect = ranksign_system_counts(p.n, p.k, p.m, p.t);
    CHECK(static_cast<long>(sys.eqs_with_fixings()) == expect.equations);
    CHECK(static_cast<long>(sys.vars_total()) == expect.unknowns);
    // the free-variable census after the assignments
    CHECK(sys.vars_free() == (p.m - 1) - 1 + (p.n + p.t) - p.n / p.d);

    // over F_2 the quadratic is identically satisfied and dropped
    LrpcParams p2{1, 9, 8, 4, 2, 1, 1, 4};
    Rng rng2(2);
    auto kp2 = ranksign_keygen(p2, rng2);
    auto proj2 = build_proj_code(kp2.pk);
    BilinearSystem sys2 = model_rank_w(p2.a, proj2.parity, 8, 9, 1);
    apply_ranksign_fixings(sys2, p2.n, p2.d, 0, 1);
    CHECK_FALSE(sys2.quad.has_value());
    CHECK(static_cast<long>(sys2.eqs_with_fixings()) ==
          ranksign_system_counts(p2.n, p2.k, p2.m, p2.t).equations - 1);
}

TEST_CASE("w-block fixings take the shapes of the systematic pattern") {
    // a tiny 2-block system; the parity is irrelevant for the census
    MatFq parity(5, 12, 0);
    BilinearSystem sys = model_rank_w(1, parity, 3, 4, 2);
    CHECK(sys.coeff_len() == 24);
    apply_rsl_fixings(sys, {{0, 0}}, {1, 2});
    // w^2 systematic + one zero + one pivot
    CHECK(sys.assigns.size() == 4 + 1 + 1);
    Fq v = 9;
    CHECK(sys.is_assigned(true, 0, 0, &v));
    CHECK(v == 1);
    CHECK(sys.is_assigned(true, 1, 0, &v));
    CHECK(v == 0);
    CHECK(sys.is_assigned(false, 0, 0, &v));
    CHECK(v == 0);
    CHECK(sys.is_assigned(false, 1, 2, &v));
    CHECK(v == 1);
    CHECK_THROWS_AS(apply_rsl_fixings(sys, {{2, 1}}, {1, 2}), std::invalid_argument);
    // degenerate single block reduces to the signing shape
    BilinearSystem sys1 = model_rank_w(1, MatFq(2, 12, 0), 3, 4, 1);
    apply_rsl_fixings(sys1, {}, {0, 1});
    CHECK(sys1.assigns.size() == 2);
}

TEST_CASE("enumeration oracle: planted solutions, degenerate inputs, budgets") {
    // plant a rank-1 matrix into a small code over F_2 and search for it
    auto F = ExtField::get(1, 1);
    FqOps ops{*F};
    Rng rng(3);
    size_t rows = 4, cols = 5;
    std::vector<Fq> x0(rows), y0(cols);
    do {
        for (auto& v : x0) v = rng.coin();
    } while (std::count(x0.begin(), x0.end(), 1) == 0);
    do {
        for (auto& v : y0) v = rng.coin();
    } while (std::count(y0.begin(), y0.end(), 1) == 0);
    // code = span{flatten(x0 y0^T), two random matrices}
    MatFq basis(3, rows * cols, 0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) basis.at(0, i * cols + j) = x0[i] & y0[j];
    for (size_t r = 1; r < 3; ++r)
        for (size_t c = 0; c < rows * cols; ++c) basis.at(r, c) = rng.coin();
    MatFq parity = kernel_basis(ops, basis);
    BilinearSystem sys = model_rank_w(1, parity, rows, cols, 1);

    auto res = solve_enumerate(sys, 1 << 16);
    CHECK(res.stats.complete);
    bool planted_found = false;
    for (const auto& [x, y] : res.solutions) {
        CHECK(verify_solution(sys, x, y)); // soundness re-check
        if (x == x0 && y == y0) planted_found = true;
    }
    CHECK(planted_found);

    // conflicting assignments empty the solution set
    BilinearSystem conflicted = sys;
    conflicted.assigns.push_back({true, 0, 0, 0});
    conflicted.assigns.push_back({true, 0, 0, 1});
    // walking x skips everything (the two assignments cannot both hold), and
    // any solver output must stay empty
    auto cres = solve_linearize(conflicted, 2);
    CHECK(cres.solutions.empty());
    auto cen = solve_enumerate(conflicted, 1 << 16);
    CHECK(cen.solutions.empty());

    // refusal instead of silent truncation
    MatFq big_parity(1, 30 * 30, 0);
    BilinearSystem big = model_rank_w(1, big_parity, 30, 30, 1);
    CHECK_THROWS_AS((void)solve_enumerate(big, 1 << 10), BudgetExceeded);
}

TEST_CASE("enumeration over either axis finds the same verified set") {
    LrpcParams p{1, 9, 8, 4, 2, 1, 1, 4};
    Rng rng(5);
    auto kp = ranksign_keygen(p, rng);
    auto proj = build_proj_code(kp.pk);
    BilinearSystem sys = model_rank_w(p.a, proj.parity, 8, 9, 1);
    apply_ranksign_fixings(sys, p.n, p.d, 0, 1);
    auto rx = solve_enumerate(sys, 1 << 20, EnumAxis::X);
    auto ry = solve_enumerate(sys, 1 << 20, EnumAxis::Y);
    std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> sx(rx.solutions.begin(),
                                                             rx.solutions.end());
    std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> sy(ry.solutions.begin(),
                                                             ry.solutions.end());
    CHECK(sx == sy);
    // threaded partitioning merges to the same set
    auto rt = solve_enumerate(sys, 1 << 20, EnumAxis::X, 4);
    std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> st(rt.solutions.begin(),
                                                             rt.solutions.end());
    CHECK(st == sx);
}

TEST_CASE("linearized solutions form a subset of the enumerated ones") {
    int nonempty = 0, deg2_complete = 0;
    const int instances = 100;
    for (int t = 0; t < instances; ++t) {
        LrpcParams p{1, 9, 8, 4, 2, 1, 1, 4};
        Rng rng(3000 + t);
        auto kp = ranksign_keygen(p, rng);
        auto proj = build_proj_code(kp.pk);
        BilinearSystem sys = model_rank_w(p.a, proj.parity, 8, 9, 1);
        apply_ranksign_fixings(sys, p.n, p.d, 0, 1);

        auto lin2 = solve_linearize(sys, 2);
        if (lin2.stats.complete && !lin2.solutions.empty()) ++deg2_complete;
        auto lin = lin2.stats.complete ? lin2 : solve_linearize(sys, 3);
        auto en = solve_enumerate(sys, 1 << 20);
        REQUIRE(en.stats.complete);
        std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> allowed(en.solutions.begin(),
                                                                      en.solutions.end());
        for (const auto& sol : lin.solutions) {
            CHECK(allowed.count(sol) == 1);
            // solutions reconstruct matrices of exactly the target rank
            auto F = ExtField::get(1, 1);
            FqOps ops{*F};
            CHECK(rank_of(ops, solution_matrix(sys, sol.first, sol.second)) == 1);
        }
        if (lin.stats.complete) {
            // a complete linearization matches the oracle exactly
            std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> got(lin.solutions.begin(),
                                                                      lin.solutions.end());
            CHECK(got == allowed);
        }
        if (!en.solutions.empty()) ++nonempty;
    }
    // the standard normalization hits a solution on a majority of keys, and
    // degree 2 already settles at least half of the instances
    CHECK(nonempty >= instances / 2);
    CHECK(deg2_complete * 2 >= nonempty);
}

TEST_CASE("system text form round trips") {
    MatFq parity(3, 12, 0);
    Rng rng(9);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 12; ++j) parity.at(i, j) = rng.coin();
    BilinearSystem sys = model_rank_w(1, parity, 3, 4, 2);
    apply_rsl_fixings(sys, {{1, 0}}, {1, 3});
    std::ostringstream os;
    write_bilinear(os, sys);
    std::istringstream is(os.str());
    BilinearSystem back = read_bilinear(is);
    CHECK(back.eqs == sys.eqs);
    CHECK(back.assigns.size() == sys.assigns.size());
    CHECK(back.w == sys.w);
    std::ostringstream os2;
    write_bilinear(os2, back);
    CHECK(os2.str() == os.str());

    // and with a quadratic constraint at q = 16
    BilinearSystem q16 = model_rank_w(4, MatFq(2, 6, 0), 2, 3, 1);
    apply_ranksign_fixings(q16, 2, 2, 3, 5);
    REQUIRE(q16.quad);
    std::ostringstream os3;
    write_bilinear(os3, q16);
    std::istringstream is3(os3.str());
    BilinearSystem back3 = read_bilinear(is3);
    REQUIRE(back3.quad);
    CHECK(back3.quad->alpha == 3);
    CHECK(back3.quad->beta == 5);
}
