#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gradual/bench.hpp"
#include "gradual/graank.hpp"
#include "gradual/oracle.hpp"
#include "gradual/paraminer.hpp"

using namespace gradual;
using namespace gradual::bench;

namespace {

std::set<GradualPattern> patterns_of(const MiningResult& r) {
    std::set<GradualPattern> out;
    for (const auto& s : r.patterns) out.insert(s.pattern);
    return out;
}

Clock fixed_clock() {
    return [] { return 0.0; };
}

}  // namespace

TEST_SUITE("integration") {

TEST_CASE("every miner is sound and a subset of the exact frequent set") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto d = fixtures::random_correlated(seed, 30 + seed * 5, 6);
        for (double sigma : {0.3, 0.5, 0.7}) {
            const auto exact = patterns_of(mine_graank(d, sigma));
            for (Algorithm a : {Algorithm::Graank, Algorithm::Paraminer, Algorithm::AcoGraank,
                                Algorithm::AcoParaminer, Algorithm::Ga, Algorithm::Pso}) {
                const auto r = run_algorithm(a, d, sigma, seed, {}, fixed_clock());
                CHECK(failed_support_recheck(d, r, sigma).empty());
                for (const auto& p : patterns_of(r)) CHECK(exact.count(p));
                CHECK(r.candidates_evaluated <= r.candidates_generated);
            }
        }
    }
}

TEST_CASE("closed and frequent sets share their maximal patterns") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto d = fixtures::random_correlated(seed, 25, 5, 0.8);
        const auto all = mine_graank(d, 0.3);
        const auto closed = mine_paraminer(d, 0.3);
        CHECK(patterns_of(closed).size() <= patterns_of(all).size());
        const auto a = maximal_only(all.patterns);
        const auto b = maximal_only(closed.patterns);
        CHECK(a == b);
    }
}

TEST_CASE("every miner is deterministic under serialization") {
    const auto d = fixtures::random_correlated(77, 50, 6);
    for (Algorithm a : {Algorithm::Graank, Algorithm::Paraminer, Algorithm::AcoGraank, Algorithm::AcoParaminer,
                        Algorithm::Ga, Algorithm::Pso}) {
        const auto first = to_json(run_algorithm(a, d, 0.4, 11, {}, fixed_clock()));
        const auto second = to_json(run_algorithm(a, d, 0.4, 11, {}, fixed_clock()));
        CHECK(first == second);
        CHECK(to_json(mining_result_from_json(first)) == first);
    }
}

TEST_CASE("paraminer tracks far more memory than graank on a few hundred rows") {
    const auto d = fixtures::random_correlated(3, 240, 6);
    const auto g = mine_graank(d, 0.5);
    const auto p = mine_paraminer(d, 0.5);
    CHECK(p.peak_tracked_bytes >= 10 * g.peak_tracked_bytes);
}

}  // TEST_SUITE
