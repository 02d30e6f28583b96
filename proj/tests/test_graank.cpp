#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "gradual/graank.hpp"
#include "gradual/oracle.hpp"

using namespace gradual;
using fixtures::Down;
using fixtures::Up;

namespace {

bool has(const MiningResult& r, const GradualPattern& p, double support) {
    return std::any_of(r.patterns.begin(), r.patterns.end(), [&](const SupportedPattern& s) {
        return s.pattern == p && std::abs(s.support - support) < 1e-12;
    });
}

Level level_one(const NumericDataset& d, std::initializer_list<GradualItem> items) {
    Level l{1, {}};
    for (auto item : items) {
        auto m = build_order_matrix(d, item);
        const double s = support_of(m, d.rows());
        l.entries.push_back({GradualPattern{item}, std::move(m), s});
    }
    return l;
}

}  // namespace

TEST_SUITE("graank") {

TEST_CASE("the abcd fixture at sigma 1.0 contains {a+, b-}") {
    const auto r = mine_graank(fixtures::abcd(), 1.0);
    CHECK(has(r, {{0, Up}, {1, Down}}, 1.0));
    for (const auto& s : r.patterns) CHECK(s.support == 1.0);
}

TEST_CASE("games fixture at sigma 0.5") {
    const auto r = mine_graank(fixtures::games(), 0.5);
    REQUIRE(r.patterns.size() == 1);
    CHECK(has(r, {{0, Up}, {1, Up}}, 0.6));
    CHECK(r.algorithm == "graank");
}

TEST_CASE("no perfectly concordant pair gives an empty result at sigma 1.0") {
    const auto r = mine_graank(fixtures::games(), 1.0);
    CHECK(r.patterns.empty());
}

TEST_CASE("sigma outside (0, 1] is rejected") {
    CHECK_THROWS_AS(mine_graank(fixtures::games(), 0.0), Error);
    CHECK_THROWS_AS(mine_graank(fixtures::games(), 1.5), Error);
}

TEST_CASE("join_candidates: base join and complement guard") {
    const auto d = fixtures::abcd();
    const auto joined = join_candidates(level_one(d, {{0, Up}, {1, Up}}));
    REQUIRE(joined.size() == 1);
    CHECK(joined[0].first == GradualPattern{{0, Up}, {1, Up}});
    CHECK(joined[0].second == and_matrices(build_order_matrix(d, {0, Up}), build_order_matrix(d, {1, Up})));

    CHECK(join_candidates(level_one(d, {{0, Up}, {0, Down}})).empty());
}

TEST_CASE("join_candidates at level 2 matches oracle count of 3-item combinations") {
    const auto d = fixtures::random_tie_free(11, 8, 4);
    // Every canonical 2-item pattern is frequent at a tiny threshold, so
    // every canonical 3-item combination must be produced exactly once.
    Level l2{2, {}};
    for (const auto& e : oracle::enumerate_frequent(d, 1e-9).frequent) {
        if (e.pattern.size() == 2) l2.entries.push_back({e.pattern, pattern_matrix(d, e.pattern), e.support});
    }
    std::sort(l2.entries.begin(), l2.entries.end(),
              [](const LevelEntry& a, const LevelEntry& b) { return a.pattern < b.pattern; });
    const auto joined = join_candidates(l2);
    // 4 choose 3 attribute triples, 4 canonical orientations each.
    CHECK(joined.size() == 16);
    std::set<GradualPattern> distinct;
    for (const auto& [p, m] : joined) {
        CHECK(is_canonical(p));
        CHECK(m == pattern_matrix(d, p));
        distinct.insert(p);
    }
    CHECK(distinct.size() == joined.size());
}

TEST_CASE("output equals the oracle exactly on random small datasets") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 4 + seed % 7;
        const std::size_t m = 3 + seed % 3;
        const auto d = seed % 4 == 0 ? fixtures::random_with_ties(seed, n, m) : fixtures::random_tie_free(seed, n, m);
        for (double sigma : {0.2, 0.4, 0.6}) {
            const auto r = mine_graank(d, sigma);
            const auto o = oracle::enumerate_frequent(d, sigma);
            REQUIRE(r.patterns.size() == o.frequent.size());
            for (std::size_t i = 0; i < o.frequent.size(); ++i) {
                CHECK(r.patterns[i].pattern == o.frequent[i].pattern);
                CHECK(r.patterns[i].support == doctest::Approx(o.frequent[i].support).epsilon(1e-12));
            }
            CHECK(r.candidates_evaluated == oracle::count_join_candidates(d, sigma));
        }
    }
}

TEST_CASE("monotone pruning: every sub-pattern of an output pattern is frequent") {
    const auto d = fixtures::random_correlated(5, 30, 6);
    const double sigma = 0.35;
    const auto r = mine_graank(d, sigma);
    REQUIRE(!r.patterns.empty());
    for (const auto& s : r.patterns) {
        for (std::size_t i = 0; i < s.pattern.size(); ++i) CHECK(pattern_support(d, s.pattern.without(i)) >= sigma);
    }
}

TEST_CASE("candidate counter is non-increasing in sigma") {
    const auto d = fixtures::random_correlated(9, 25, 6);
    std::size_t prev = SIZE_MAX;
    for (double sigma : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 1.0}) {
        const auto r = mine_graank(d, sigma);
        CHECK(r.candidates_evaluated <= prev);
        CHECK(r.candidates_evaluated <= r.candidates_generated);
        prev = r.candidates_evaluated;
    }
}

TEST_CASE("candidate cap raises a distinct error") {
    const auto d = fixtures::random_correlated(2, 20, 6);
    GraankConfig cfg{0.1};
    cfg.max_candidates_per_level = 3;
    CHECK_THROWS_AS(mine_graank(d, cfg), CandidateLimitError);
    CHECK_THROWS_AS(mine_graank(d, cfg), ResourceLimitError);
}

TEST_CASE("maximal-only filter keeps only patterns without a frequent superset") {
    const auto d = fixtures::random_correlated(4, 30, 5);
    const auto all = mine_graank(d, 0.3);
    GraankConfig cfg{0.3};
    cfg.maximal_only = true;
    const auto maximal = mine_graank(d, cfg);
    CHECK(maximal.patterns.size() <= all.patterns.size());
    for (const auto& s : maximal.patterns) {
        for (const auto& t : all.patterns) {
            if (t.pattern == s.pattern) continue;
            CHECK_FALSE(s.pattern.is_subset_of(t.pattern));
            CHECK_FALSE(complement(s.pattern).is_subset_of(t.pattern));
        }
    }
}

TEST_CASE("tracked memory grows with n") {
    std::size_t prev = 0;
    for (std::size_t n : {20u, 60u, 120u, 240u}) {
        const auto r = mine_graank(fixtures::random_correlated(1, n, 4), 0.3);
        CHECK(r.peak_tracked_bytes > prev);
        prev = r.peak_tracked_bytes;
    }
}

}  // TEST_SUITE
