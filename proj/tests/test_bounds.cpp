#include <doctest.h>

#include "ranklab/bounds.hpp"
#include "ranklab/matrix.hpp"

using namespace ranklab;

TEST_CASE("sphere sizes by exhaustive enumeration at 2x2 over F_2") {
    // walk all 16 binary 2x2 matrices and bucket by rank
    auto F = ExtField::get(1, 1);
    FqOps ops{*F};
    int by_rank[3] = {0, 0, 0};
    for (int bits = 0; bits < 16; ++bits) {
        MatFq M(2, 2, 0);
        for (int p = 0; p < 4; ++p) M.at(p / 2, p % 2) = (bits >> p) & 1;
        by_rank[rank_of(ops, M)]++;
    }
    CHECK(by_rank[0] == 1);
    CHECK(by_rank[1] == 9);
    CHECK(by_rank[2] == 6);
    CHECK(sphere_size(BigInt(2), 2, 2, 0) == 1);
    CHECK(sphere_size(BigInt(2), 2, 2, 1) == 9);
    CHECK(sphere_size(BigInt(2), 2, 2, 2) == 6);
    CHECK(ball_size(BigInt(2), 2, 2, 2) == 16);
    CHECK_THROWS_AS((void)sphere_size(BigInt(2), 2, 2, 3), std::domain_error);
}

TEST_CASE("sphere sizes partition small spaces") {
    for (unsigned a = 1; a <= 3; ++a) {
        BigInt q = BigInt(1) << a;
        for (unsigned m = 1; m <= 5; ++m)
            for (unsigned n = 1; n <= 5; ++n) {
                BigInt total = 0;
                for (unsigned i = 0; i <= std::min(m, n); ++i)
                    total += sphere_size(q, m, n, i);
                BigInt expect = 1;
                for (unsigned e = 0; e < m * n; ++e) expect *= q;
                CHECK(total == expect);
            }
    }
}

TEST_CASE("exact Gilbert-Varshamov distances") {
    CHECK(gv_distance_exact(BigInt(2), 4, 4, 4) == 0); // k = n
    // frozen against the big-integer ball values: B_1 = 226 < 256 <= B_2 = 7576
    CHECK(ball_size(BigInt(2), 4, 4, 1) == 226);
    CHECK(ball_size(BigInt(2), 4, 4, 2) == 7576);
    CHECK(gv_distance_exact(BigInt(2), 4, 4, 2) == 2);
}

TEST_CASE("asymptotic estimate tracks the exact value at m = n = 40") {
    unsigned exact = gv_distance_exact(BigInt(2), 40, 40, 20);
    double est = gv_distance_asymptotic(40, 40, 20);
    CHECK(est == doctest::Approx(0.2929 * 40).epsilon(0.01));
    CHECK(std::abs(static_cast<double>(exact) - est) / est <= 0.15);
}

TEST_CASE("singleton distances") {
    CHECK(singleton_distance(4, 4, 4) == 1);
    CHECK(singleton_distance(4, 4, 2) == 3);
    CHECK(singleton_distance(21, 20, 10) == 11);
}

TEST_CASE("binary entropy and the iteration exponent") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    // Stirling slack around the exact binomial
    double exact = big_log2(big_binomial(100, 10));
    double est = entropy_estimate(100, 10);
    CHECK(std::abs(exact - est) <= 0.5 * std::log2(100.0) + 2.0);
    CHECK(prange_exponent(60, 40, 2) ==
          doctest::Approx(big_log2(big_binomial(60, 2)) - big_log2(big_binomial(40, 2)))
              .epsilon(0.05));
}

TEST_CASE("the exponent stays logarithmic along the admissible family") {
    // family: w_sgn ~ sqrt(n), w_dec = n / w_sgn, k = n (1 - h(w_sgn / n))
    double worst_ratio = 0;
    for (unsigned n : {1000u, 10000u, 100000u}) {
        unsigned w_sgn = static_cast<unsigned>(std::round(std::sqrt(n)));
        unsigned w_dec = n / w_sgn;
        unsigned k = static_cast<unsigned>(
            std::round(n * (1.0 - binary_entropy(static_cast<double>(w_sgn) / n))));
        double expo = prange_exponent(n, k, w_dec);
        worst_ratio = std::max(worst_ratio, expo / std::log2(static_cast<double>(n)));
    }
    // the recorded constant: the ratio stays bounded (measured ceiling)
    CHECK(worst_ratio <= 8.0);
}
