#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace fixtures {

using gradual::GradualItem;
using gradual::NumericDataset;
using gradual::Variation;

inline constexpr Variation Up = Variation::Up;
inline constexpr Variation Down = Variation::Down;

// Game / Win / Injury, five rows.
inline NumericDataset games() {
    return NumericDataset({"Game", "Win", "Injury"},
                          {{30, 3, 1}, {35, 2, 2}, {40, 4, 2}, {50, 1, 1}, {52, 7, 1}});
}

// Attributes a, b, c, d over rows r1..r4 (indices 0..3).
inline NumericDataset abcd() {
    return NumericDataset({"a", "b", "c", "d"},
                          {{5, 30, 43, 97}, {4, 35, 33, 86}, {3, 40, 42, 108}, {1, 50, 49, 27}});
}

inline std::vector<std::string> default_names(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("A" + std::to_string(i));
    return names;
}

// Every column is a random permutation of 0..n-1, so no attribute has ties.
inline NumericDataset random_tie_free(std::uint64_t seed, std::size_t n, std::size_t m) {
    gradual::Rng rng(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<double> col(n);
        std::iota(col.begin(), col.end(), 0.0);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(col[i], col[rng.index(i + 1)]);
        for (std::size_t r = 0; r < n; ++r) rows[r][c] = col[r];
    }
    return NumericDataset(default_names(m), std::move(rows));
}

// Small integer values so ties are frequent.
inline NumericDataset random_with_ties(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t levels = 3) {
    gradual::Rng rng(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    for (auto& row : rows) {
        for (auto& x : row) x = static_cast<double>(rng.index(levels));
    }
    return NumericDataset(default_names(m), std::move(rows));
}

// Correlated columns: a shared latent trend plus noise, which yields many
// frequent patterns at moderate thresholds.
inline NumericDataset random_correlated(std::uint64_t seed, std::size_t n, std::size_t m, double noise = 0.5) {
    gradual::Rng rng(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    std::vector<int> sign(m);
    for (auto& s : sign) s = rng.uniform() < 0.5 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) {
        const double latent = rng.uniform();
        for (std::size_t c = 0; c < m; ++c) rows[r][c] = sign[c] * latent + noise * rng.uniform();
    }
    return NumericDataset(default_names(m), std::move(rows));
}

inline gradual::GradualPattern pat(std::initializer_list<GradualItem> items) {
    std::vector<GradualItem> v(items);
    std::sort(v.begin(), v.end());
    return gradual::GradualPattern(std::move(v));
}

}  // namespace fixtures
