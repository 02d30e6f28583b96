#pragma once

#include <cstddef>
#include <vector>

#include "gradual/core.hpp"

namespace gradual::oracle {

struct Entry {
    GradualPattern pattern;
    double support = 0.0;
    std::size_t concordant = 0;
    bool closed = false;
};

struct OracleResult {
    /// Every frequent canonical pattern with >= 2 items, sorted by pattern.
    std::vector<Entry> frequent;

    std::vector<Entry> closed() const;
};

/// Ordered row pairs (x, x') respected by every item, by direct comparison of
/// cell values. Shares nothing with the bitmap kernel.
std::vector<std::size_t> respecting_pairs(const NumericDataset& d, const GradualPattern& p);

double brute_support(const NumericDataset& d, const GradualPattern& p);

/// Exhaustive enumeration of the 3^m candidate space.
OracleResult enumerate_frequent(const NumericDataset& d, double sigma, std::size_t max_m = 12);

/// Number of canonical patterns (>= 2 items) all of whose one-smaller subsets
/// are frequent: what a level-wise miner must evaluate after subset pruning.
std::size_t count_join_candidates(const NumericDataset& d, double sigma, std::size_t max_m = 12);

}  // namespace gradual::oracle
