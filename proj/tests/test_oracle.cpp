#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gradual/oracle.hpp"

using namespace gradual;
using fixtures::Down;
using fixtures::Up;

namespace {

const oracle::Entry* find(const oracle::OracleResult& r, const GradualPattern& p) {
    const auto it = std::find_if(r.frequent.begin(), r.frequent.end(),
                                 [&](const oracle::Entry& e) { return e.pattern == p; });
    return it == r.frequent.end() ? nullptr : &*it;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("the abcd fixture at sigma 0.5") {
    const auto r = oracle::enumerate_frequent(fixtures::abcd(), 0.5);
    const auto* ab = find(r, {{0, Up}, {1, Down}});
    REQUIRE(ab);
    CHECK(ab->support == 1.0);
    CHECK(ab->concordant == 6);
    const auto* ac = find(r, {{0, Up}, {2, Down}});
    REQUIRE(ac);
    CHECK(ac->support == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
    for (const auto& e : r.frequent) {
        CHECK(is_canonical(e.pattern));
        CHECK(e.pattern.size() >= 2);
        CHECK(e.support >= 0.5);
    }
}

TEST_CASE("a duplicated row prevents support 1.0") {
    const NumericDataset d({"x", "y", "z"}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 4}, {5, 6, 7}});
    CHECK(oracle::enumerate_frequent(d, 1.0).frequent.empty());
    CHECK_FALSE(oracle::enumerate_frequent(d, 0.8).frequent.empty());
}

TEST_CASE("two attributes give at most two canonical patterns") {
    const auto d = fixtures::random_tie_free(1, 6, 2);
    const auto r = oracle::enumerate_frequent(d, 1e-9);
    CHECK(r.frequent.size() <= 2);
    for (const auto& e : r.frequent) CHECK(e.pattern[0].variation == Up);
}

TEST_CASE("guard on the attribute count") {
    const auto d = fixtures::random_tie_free(1, 5, 6);
    CHECK_THROWS_AS(oracle::enumerate_frequent(d, 0.5, 5), Error);
    CHECK_THROWS_AS(oracle::count_join_candidates(d, 0.5, 5), Error);
}

TEST_CASE("respecting_pairs agrees with the definition") {
    const auto d = fixtures::games();
    const GradualPattern p{{0, Up}, {1, Down}};
    const auto pairs = oracle::respecting_pairs(d, p);
    CHECK(pairs.size() == 4);
    for (auto idx : pairs) {
        const std::size_t x = idx / 5, y = idx % 5;
        CHECK(d.value(x, 0) < d.value(y, 0));
        CHECK(d.value(x, 1) > d.value(y, 1));
    }
    CHECK(oracle::brute_support(d, p) == doctest::Approx(0.4));
}

TEST_CASE("closed flags: closed iff every one-item extension loses a pair") {
    const auto d = fixtures::random_with_ties(12, 9, 4);
    const auto r = oracle::enumerate_frequent(d, 0.1);
    std::size_t closed = 0;
    for (const auto& e : r.frequent) {
        bool strictly_shrinks = true;
        for (std::uint32_t a = 0; a < 4; ++a) {
            if (e.pattern.has_attribute(a)) continue;
            for (Variation v : {Up, Down}) {
                if (oracle::respecting_pairs(d, e.pattern.with({a, v})).size() == e.concordant) strictly_shrinks = false;
            }
        }
        CHECK(e.closed == strictly_shrinks);
        closed += e.closed;
    }
    CHECK(r.closed().size() == closed);
}

}  // TEST_SUITE
