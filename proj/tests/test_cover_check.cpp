#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "poolkit/cover_check.hpp"
#include "test_util.hpp"

using namespace poolkit;
using testutil::fano_cyclic;

namespace {

// local masks of a family over the base, for readable expectations
std::vector<uint32_t> masks_of(const CoverFamily& f) { return f.sets; }

CoverFamily make_cover(int v, const std::vector<int>& base_1based,
                       const std::vector<std::vector<int>>& sets_1based) {
    CoverFamily f;
    f.base = Bitset(v);
    for (int e : base_1based) f.base.set(e - 1);
    f.base_index = f.base.indices();
    auto local = [&](const std::vector<int>& s) {
        uint32_t m = 0;
        for (int e : s)
            for (size_t k = 0; k < f.base_index.size(); ++k)
                if (f.base_index[k] == e - 1) m |= uint32_t(1) << k;
        return m;
    };
    for (const auto& s : sets_1based) f.sets.push_back(local(s));
    std::sort(f.sets.begin(), f.sets.end());
    return f;
}

}  // namespace

TEST_CASE("private_sets") {
    SUBCASE("single member: everything is private") {
        SubsetFamily f = SubsetFamily::from_lists(3, {{1, 3}});
        CoverFamily priv = private_sets(f, 0);
        CHECK(priv.sets.size() == 4);  // all subsets of a 2-element base
    }
    SUBCASE("Fano member {1,2,4}") {
        CoverFamily priv = private_sets(fano_cyclic(), 0);
        // pairs and the full block are private; points and ∅ are not
        CHECK(masks_of(priv) == std::vector<uint32_t>{0b011, 0b101, 0b110, 0b111});
    }
    SUBCASE("two overlapping members") {
        SubsetFamily f = SubsetFamily::from_lists(3, {{1, 2}, {1, 3}});
        CoverFamily priv = private_sets(f, 0);
        // base {1,2}: private are {2} and {1,2}; {1} and ∅ lie in both
        CHECK(masks_of(priv) == std::vector<uint32_t>{0b10, 0b11});
    }
    SUBCASE("duplicates are rejected") {
        SubsetFamily f = SubsetFamily::from_lists(3, {{1, 2}, {1, 2}});
        CHECK_THROWS_AS(private_sets(f, 0), std::invalid_argument);
    }
}

TEST_CASE("is_2q_cover") {
    SUBCASE("all subsets of size >= 2 cover a 3-set at q = 0") {
        CoverFamily f = make_cover(7, {1, 2, 4},
                                   {{1, 2}, {1, 4}, {2, 4}, {1, 2, 4}});
        CHECK(is_2q_cover(f, 0));
    }
    SUBCASE("full set alone fails the singleton partition") {
        CoverFamily f = make_cover(2, {1, 2}, {{1, 2}});
        CoverViolation viol;
        CHECK_FALSE(is_2q_cover(f, 0, &viol));
        CHECK(viol.kind == CoverViolation::Kind::Partition);
    }
    SUBCASE("upward closure is required") {
        CoverFamily f = make_cover(2, {1, 2}, {{1}});
        CoverViolation viol;
        CHECK_FALSE(is_2q_cover(f, 0, &viol));
        CHECK(viol.kind == CoverViolation::Kind::Closure);
    }
    SUBCASE("base no larger than q is rejected") {
        CoverFamily f = make_cover(2, {1}, {{1}});
        CHECK_THROWS_AS(is_2q_cover(f, 1), std::invalid_argument);
    }
}

TEST_CASE("threshold families cover odd-size bases exactly") {
    // for |B| = 2t+q−1 the family {b ⊆ B : |b| ≥ t} is a (2,q)-cover
    for (int t = 1; t <= 3; ++t) {
        for (int q = 0; q <= 2; ++q) {
            int k = 2 * t + q - 1;
            if (k < 1) continue;
            std::vector<int> base;
            for (int e = 1; e <= k; ++e) base.push_back(e);
            std::vector<std::vector<int>> sets;
            for (uint32_t m = 0; m < (uint32_t(1) << k); ++m) {
                if (std::popcount(m) < t) continue;
                std::vector<int> s;
                for (int b = 0; b < k; ++b)
                    if ((m >> b) & 1) s.push_back(b + 1);
                sets.push_back(s);
            }
            CoverFamily f = make_cover(k + 2, base, sets);
            CAPTURE(t);
            CAPTURE(q);
            CHECK(is_2q_cover(f, q));
        }
    }
}

TEST_CASE("verify_via_lemma1 examples") {
    CHECK(verify_via_lemma1(fano_cyclic(), 0).ok);

    SubsetFamily ident = SubsetFamily::from_lists(3, {{1}, {2}, {3}});
    CHECK(verify_via_lemma1(ident, 0).ok);

    SubsetFamily triangle = SubsetFamily::from_lists(3, {{1, 2}, {2, 3}, {1, 3}});
    SolutionWitness w = verify_via_lemma1(triangle, 0);
    CHECK_FALSE(w.ok);
    CHECK_FALSE(verify_solution(triangle, 2, 0).ok);
    REQUIRE(w.counterexample.has_value());
    // the reconstructed counterexample genuinely violates the solution
    // condition
    CHECK(w.counterexample->deficit.count() <= 0);
}

TEST_CASE("lemma-1 equivalence with direct verification") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 600; ++trial) {
        int v = 1 + int(rng() % 7);
        int n = 1 + int(rng() % 6);
        SubsetFamily f = testutil::random_family(rng, v, n);
        int q = int(rng() % 3);
        CAPTURE(trial);
        CHECK(verify_via_lemma1(f, q).ok == verify_solution(f, 2, q).ok);
    }
}
