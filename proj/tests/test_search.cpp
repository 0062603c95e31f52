#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poolkit/bounds.hpp"
#include "poolkit/search.hpp"

using namespace poolkit;

TEST_CASE("extend_candidates from the empty family") {
    SubsetFamily f(2);
    std::vector<Bitset> c = extend_candidates(f, 1, 0);
    // every nonempty subset, in lex order: {1},{1,2},{2}
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Bitset::of(2, {0}));
    CHECK(c[1] == Bitset::of(2, {0, 1}));
    CHECK(c[2] == Bitset::of(2, {1}));
}

TEST_CASE("extend_candidates after {1,2} at (1,0)") {
    SubsetFamily f = SubsetFamily::from_lists(3, {{1, 2}});
    std::vector<Bitset> c = extend_candidates(f, 1, 0);
    // lex-later sets with both differences nonempty: {1,3},{2,3},{3}
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Bitset::of(3, {0, 2}));
    CHECK(c[1] == Bitset::of(3, {1, 2}));
    CHECK(c[2] == Bitset::of(3, {2}));
}

TEST_CASE("nothing extends past the full set") {
    SubsetFamily f = SubsetFamily::from_lists(4, {{1, 2, 3, 4}});
    CHECK(extend_candidates(f, 1, 0).empty());
    CHECK(extend_candidates(f, 2, 0).empty());
}

TEST_CASE("max_design_search certified values") {
    SUBCASE("(3,1,0)") {
        SearchResult r = max_design_search(3, 1, 0);
        CHECK(r.certified);
        CHECK(r.n_max == 3);
        CHECK(verify_solution(r.witness, 1, 0).ok);
    }
    SUBCASE("(5,1,0) reaches the Sperner layer") {
        SearchResult r = max_design_search(5, 1, 0);
        CHECK(r.certified);
        CHECK(r.n_max == 10);
        CHECK(BigInt(r.n_max) == upper_bound_p1(5, 0).n_max);
        CHECK(verify_solution(r.witness, 1, 0).ok);
    }
    SUBCASE("(4,2,0) singleton witness") {
        SearchResult r = max_design_search(4, 2, 0);
        CHECK(r.certified);
        CHECK(r.n_max == 4);
        REQUIRE(r.witness.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(r.witness.members[i] == Bitset::of(4, {i}));
        CHECK(verify_solution(r.witness, 2, 0).ok);
    }
}

TEST_CASE("search never exceeds the exact bounds") {
    for (int v = 2; v <= 5; ++v) {
        for (int q = 0; q <= 1; ++q) {
            SearchResult r1 = max_design_search(v, 1, q);
            if (r1.certified) CHECK(BigInt(r1.n_max) <= upper_bound_p1(v, q).n_max);
            SearchResult r2 = max_design_search(v, 2, q);
            if (r2.certified) CHECK(BigInt(r2.n_max) <= upper_bound_p2(v, q).n_max);
        }
    }
}

TEST_CASE("search is deterministic") {
    SearchResult a = max_design_search(4, 1, 0);
    SearchResult b = max_design_search(4, 1, 0);
    REQUIRE(a.n_max == b.n_max);
    REQUIRE(a.witness.size() == b.witness.size());
    for (int i = 0; i < a.witness.size(); ++i)
        CHECK(a.witness.members[i] == b.witness.members[i]);
    CHECK(a.n_max == 6);
}

TEST_CASE("budget exhaustion yields an uncertified result") {
    SearchResult r = max_design_search(5, 1, 0, /*node_budget=*/5);
    CHECK_FALSE(r.certified);
    CHECK(r.nodes >= 5);
    CHECK(verify_solution(r.witness, 1, 0).ok);
}

TEST_CASE("witnesses always verify at higher q too") {
    SearchResult r = max_design_search(4, 1, 1);
    CHECK(r.certified);
    CHECK(verify_solution(r.witness, 1, 1).ok);
    CHECK(BigInt(r.n_max) <= upper_bound_p1(4, 1).n_max);
}
