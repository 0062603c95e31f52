#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "poolkit/bounds.hpp"

using namespace poolkit;

TEST_CASE("binom against a Pascal-triangle oracle") {
    const int N = 40;
    std::vector<std::vector<BigInt>> pascal(N + 1, std::vector<BigInt>(N + 1, 0));
    for (int a = 0; a <= N; ++a) {
        pascal[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            pascal[a][b] = pascal[a - 1][b - 1] + (b <= a - 1 ? pascal[a - 1][b] : 0);
    }
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b <= a; ++b) CHECK(binom(a, b) == pascal[a][b]);
    CHECK(binom(7, 3) == 35);
    CHECK(binom(8, 4) == 70);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(3, -1) == 0);
}

TEST_CASE("kq examples") {
    for (int v = 1; v <= 30; ++v) CHECK(kq(v, 0).kq == BigRat(1));
    SUBCASE("odd q") {
        ChainWeight w = kq(8, 1);
        CHECK(w.kq == BigRat(5));
        CHECK(w.span == 4);
    }
    SUBCASE("even q") { CHECK(kq(6, 2).kq == BigRat(10)); }
    SUBCASE("degenerate T") {
        CHECK_THROWS_AS(kq(2, 3), DegenerateBoundError);  // T = floor(2/4) = 0
        CHECK_THROWS_AS(kq(1, 1), DegenerateBoundError);
    }
}

TEST_CASE("p = 1 bound values") {
    CHECK(upper_bound_p1(4, 0).n_max == 6);
    CHECK(upper_bound_p1(8, 1).n_max == 14);
    CHECK(upper_bound_p1(6, 2).n_max == 2);
    CHECK(upper_bound_p1(7, 1).n_max == 7);
    SUBCASE("q = 0 is the middle binomial for all v") {
        for (int v = 1; v <= 20; ++v) CHECK(upper_bound_p1(v, 0).n_max == binom(v, v / 2));
    }
}

TEST_CASE("tstar examples and closed form") {
    CHECK(tstar(7, 0).value == 1);
    CHECK(tstar(9, 0).value == 2);
    CHECK(tstar(12, 2).value == 2);
    SUBCASE("closed form for q in {0,1}") {
        for (int q = 0; q <= 1; ++q)
            for (int v = 7; v <= 50; ++v) CHECK(tstar(v, q).value == (v - 2 + 4) / 5);
    }
    SUBCASE("small-v clamp is flagged") {
        CHECK(tstar(2, 0).clamped);
        CHECK_FALSE(tstar(7, 0).clamped);
    }
}

TEST_CASE("p = 2 bound values") {
    CHECK(upper_bound_p2(7, 0).n_max == 7);
    CHECK(*upper_bound_p2(7, 0).tstar == 1);
    CHECK(upper_bound_p2(9, 0).n_max == 12);
    CHECK(*upper_bound_p2(9, 0).tstar == 2);
    CHECK(upper_bound_p2(7, 1).n_max == 3);
}

TEST_CASE("bounds are non-increasing in q") {
    for (int v = 2; v <= 30; ++v) {
        BigInt prev1 = -1, prev2 = -1;
        for (int q = 0; q <= 6; ++q) {
            try {
                BigInt b1 = upper_bound_p1(v, q).n_max;
                if (prev1 >= 0) CHECK(b1 <= prev1);
                prev1 = b1;
            } catch (const DegenerateBoundError&) {
            }
            BigInt b2 = upper_bound_p2(v, q).n_max;
            if (prev2 >= 0) CHECK(b2 <= prev2);
            prev2 = b2;
        }
    }
}

TEST_CASE("min_pools_estimate") {
    CHECK(min_pools_estimate(1, 1) == 0.0);
    CHECK(min_pools_estimate(1, 2) == 0.0);
    CHECK(min_pools_estimate(1000, 1) == doctest::Approx(9.9658).epsilon(1e-3));
    CHECK(min_pools_estimate(1000, 2) == doctest::Approx(30.9579).epsilon(1e-3));
    CHECK_THROWS_AS(min_pools_estimate(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_pools_estimate(0, 1), std::invalid_argument);
}
