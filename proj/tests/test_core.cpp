#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "gradual/core.hpp"
#include "gradual/oracle.hpp"

using namespace gradual;
using fixtures::Down;
using fixtures::Up;

namespace {

NumericDataset parse(const std::string& text, bool id = false) {
    std::istringstream in(text);
    return parse_csv(in, id);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const DatasetError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("csv: games fixture with id column") {
    const auto d = parse("id,Game,Win,Injury\nr1,30,3,1\nr2,35,2,2\nr3,40,4,2\nr4,50,1,1\nr5,52,7,1\n", true);
    CHECK(d.rows() == 5);
    CHECK(d.cols() == 3);
    CHECK(d.attribute_names()[0] == "Game");
    CHECK(d.value(4, 1) == 7.0);
    CHECK(d.attribute_index("Injury") == 2);
    CHECK_THROWS_AS(d.attribute_index("Loss"), DatasetError);
}

TEST_CASE("csv: boundary and malformed inputs") {
    CHECK(error_of("a,b\n1,2\n").find("n >= 2 required") != std::string::npos);
    CHECK(error_of("a,b\n").find("no data rows") != std::string::npos);
    CHECK(error_of("").find("missing header") != std::string::npos);
    CHECK(error_of("a,b\n1,x\n2,3\n").find("non-numeric value 'x'") != std::string::npos);
    CHECK(error_of("a,b\n1,2,3\n2,3\n").find("expected 2") != std::string::npos);
    CHECK(error_of("a\n1\n2\n").find("m >= 2") != std::string::npos);
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv", false), DatasetError);
}

TEST_CASE("csv: whitespace, quotes, blank lines and BOM") {
    const auto d = parse("\xEF\xBB\xBF\"a\", b \n 1 , 2\n\n3,4\r\n");
    CHECK(d.rows() == 2);
    CHECK(d.attribute_names()[0] == "a");
    CHECK(d.attribute_names()[1] == "b");
    CHECK(d.value(1, 1) == 4.0);
}

TEST_CASE("csv: load from file") {
    const auto path = std::filesystem::temp_directory_path() / "gradual_core_test.csv";
    {
        std::ofstream out(path);
        out << "x,y\n1,2\n3,1\n";
    }
    const auto d = load_csv(path.string(), false);
    CHECK(d.rows() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("dataset rejects non-finite values") {
    CHECK_THROWS_AS(NumericDataset({"a", "b"}, {{1, 2}, {std::nan(""), 3}}), DatasetError);
}

TEST_CASE("order matrix for (a, Down) on the abcd fixture") {
    const auto d = fixtures::abcd();
    const auto m = build_order_matrix(d, {0, Down});
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) CHECK(m.test(x, y) == (x < y));
    }
    CHECK(m.count() == 6);
}

TEST_CASE("order matrix: (c, Up) matches pairwise comparison") {
    const auto d = fixtures::abcd();
    const auto m = build_order_matrix(d, {2, Up});
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) CHECK(m.test(x, y) == (d.value(x, 2) < d.value(y, 2)));
    }
}

TEST_CASE("order matrix: constant column is all zero") {
    const NumericDataset d({"k", "v"}, {{1, 1}, {1, 2}, {1, 3}});
    CHECK(build_order_matrix(d, {0, Up}).count() == 0);
    CHECK(build_order_matrix(d, {0, Down}).count() == 0);
    CHECK_THROWS_AS(build_order_matrix(d, {2, Up}), Error);
}

TEST_CASE("order matrix: antisymmetry and zero diagonal on tie-free data") {
    const auto d = fixtures::random_tie_free(7, 70, 3);
    for (std::uint32_t a = 0; a < 3; ++a) {
        const auto m = build_order_matrix(d, {a, Up});
        for (std::size_t x = 0; x < d.rows(); ++x) {
            CHECK_FALSE(m.test(x, x));
            for (std::size_t y = x + 1; y < d.rows(); ++y) CHECK((m.test(x, y) ^ m.test(y, x)));
        }
    }
}

TEST_CASE("and_matrices: identity, annihilator, abcd fixture") {
    const auto d = fixtures::abcd();
    const auto a_down = build_order_matrix(d, {0, Down});
    CHECK(and_matrices(a_down, OrderMatrix::ones(4)) == a_down);
    CHECK(and_matrices(a_down, OrderMatrix::zeros(4)).count() == 0);

    const auto both = and_matrices(a_down, build_order_matrix(d, {2, Up}));
    CHECK(both.count() == 4);
    for (auto [x, y] : {std::pair{0, 3}, {1, 2}, {1, 3}, {2, 3}}) CHECK(both.test(x, y));
    CHECK_THROWS_AS(and_matrices(a_down, OrderMatrix::ones(5)), Error);
}

TEST_CASE("OrderMatrix::ones has a zero diagonal and spans word boundaries") {
    const auto m = OrderMatrix::ones(130);
    CHECK(m.count() == 130 * 129);
    CHECK_FALSE(m.test(64, 64));
    CHECK(m.test(0, 129));
}

TEST_CASE("support_of examples") {
    const auto d2 = fixtures::abcd();
    CHECK(pattern_support(d2, {{0, Down}, {2, Up}}) == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
    const auto d1 = fixtures::games();
    CHECK(pattern_support(d1, {{0, Up}, {1, Down}}) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(support_of(OrderMatrix::zeros(5), 5) == 0.0);
    CHECK_THROWS_AS(support_of(OrderMatrix::zeros(1), 1), Error);
}

TEST_CASE("complement and canonicalize") {
    const GradualPattern p{{0, Up}, {1, Down}};
    const GradualPattern q{{0, Down}, {1, Up}};
    CHECK(complement(p) == q);
    CHECK(complement(complement(p)) == p);
    CHECK(canonicalize(GradualPattern{{1, Up}, {0, Down}}) == p);
    CHECK(canonicalize(GradualPattern{{0, Up}, {1, Up}}) == GradualPattern{{0, Up}, {1, Up}});
    CHECK(canonicalize(q) == canonicalize(p));
    CHECK(canonicalize(canonicalize(q)) == canonicalize(q));
    CHECK(is_canonical(p));
    CHECK_FALSE(is_canonical(q));

    const auto d = fixtures::abcd();
    CHECK(pattern_support(d, {{0, Up}, {2, Down}}) == pattern_support(d, {{0, Down}, {2, Up}}));
}

TEST_CASE("pattern basics") {
    CHECK_THROWS_AS((GradualPattern{{0, Up}, {0, Down}}), Error);
    const GradualPattern p{{2, Down}, {0, Up}};
    CHECK(p[0].attribute == 0);
    CHECK(p.has_attribute(2));
    CHECK(p.contains({2, Down}));
    CHECK_FALSE(p.contains({2, Up}));
    CHECK(GradualPattern{{0, Up}}.is_subset_of(p));
    CHECK(p.with({1, Up}).size() == 3);
    CHECK_THROWS_AS(p.with({0, Down}), Error);
    CHECK(p.without(0) == GradualPattern{{2, Down}});
    const std::vector<std::string> names{"x", "y", "z"};
    CHECK(p.to_string(names) == "{x+, z-}");
    for (std::size_t i = 0; i < 20; ++i) CHECK(item_index(item_from_index(i)) == i);
}

TEST_CASE("min_concordant_count agrees with support_ratio") {
    for (std::size_t n : {2u, 3u, 5u, 10u, 116u}) {
        for (double sigma : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.94, 1.0}) {
            const auto c = min_concordant_count(sigma, n);
            CHECK(support_ratio(c, n) >= sigma);
            if (c > 0) CHECK(support_ratio(c - 1, n) < sigma);
        }
    }
    CHECK(min_concordant_count(1.5, 4) == pair_count(4) + 1);
}

TEST_CASE("kernel support equals brute-force pair counting, exhaustively") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto d = seed % 2 ? fixtures::random_tie_free(seed, 4 + seed % 7, 3 + seed % 3)
                                : fixtures::random_with_ties(seed, 4 + seed % 7, 3 + seed % 3);
        const auto m = d.cols();
        std::size_t codes = 1;
        for (std::size_t i = 0; i < m; ++i) codes *= 3;
        for (std::size_t code = 0; code < codes; ++code) {
            std::vector<GradualItem> items;
            std::size_t c = code;
            for (std::uint32_t a = 0; a < m; ++a, c /= 3) {
                if (c % 3 == 1) items.push_back({a, Up});
                if (c % 3 == 2) items.push_back({a, Down});
            }
            if (items.empty()) continue;
            const GradualPattern p(items);
            CHECK(pattern_support(d, p) == doctest::Approx(oracle::brute_support(d, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("anti-monotonicity and complement symmetry on random data") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto d = fixtures::random_tie_free(seed, 9, 5);
        Rng rng(seed);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<GradualItem> items;
            for (std::uint32_t a = 0; a < 5; ++a) {
                const auto r = rng.index(3);
                if (r == 1) items.push_back({a, Up});
                if (r == 2) items.push_back({a, Down});
            }
            if (items.size() < 2) continue;
            const GradualPattern q(items);
            const double sq = pattern_support(d, q);
            for (std::size_t i = 0; i < q.size(); ++i) CHECK(sq <= pattern_support(d, q.without(i)));
            CHECK(sq == pattern_support(d, complement(q)));
        }
    }
}

TEST_CASE("complement symmetry survives ties") {
    const auto d = fixtures::random_with_ties(3, 10, 4, 2);
    const GradualPattern p{{0, Up}, {1, Down}, {3, Up}};
    CHECK(pattern_support(d, p) == pattern_support(d, complement(p)));
}

}  // TEST_SUITE
