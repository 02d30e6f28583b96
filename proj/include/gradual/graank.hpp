#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace gradual {

class CandidateLimitError : public ResourceLimitError {
public:
    using ResourceLimitError::ResourceLimitError;
};

struct LevelEntry {
    GradualPattern pattern;
    OrderMatrix matrix;
    double support = 0.0;
};

/// Frequent patterns of one size. Level 1 holds both orientations of every
/// frequent item; levels >= 2 hold canonical patterns only.
struct Level {
    std::size_t k = 0;
    std::vector<LevelEntry> entries;
};

struct GraankConfig {
    double sigma = 0.5;
    /// Abort with CandidateLimitError when one level generates more candidates.
    std::size_t max_candidates_per_level = 2'000'000;
    bool maximal_only = false;
};

/// Apriori prefix join: two k-patterns sharing their first k-1 items and
/// ending on different attributes produce one (k+1)-candidate whose matrix is
/// the AND of the parents'. Joins from level 1 only start from Up items so
/// that every candidate is canonical.
std::vector<std::pair<GradualPattern, OrderMatrix>> join_candidates(const Level& level);

/// Level-wise breadth-first miner over order matrices. Returns every frequent
/// canonical pattern with at least two items.
MiningResult mine_graank(const NumericDataset& d, const GraankConfig& cfg);

inline MiningResult mine_graank(const NumericDataset& d, double sigma) {
    return mine_graank(d, GraankConfig{sigma});
}

}  // namespace gradual
