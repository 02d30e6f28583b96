#include "gradual/graank.hpp"

#include <algorithm>
#include <set>

namespace gradual {
namespace {

bool same_prefix(const GradualPattern& a, const GradualPattern& b, std::size_t len) {
    return std::equal(a.items().begin(), a.items().begin() + static_cast<std::ptrdiff_t>(len), b.items().begin());
}

std::size_t level_bytes(const Level& level) {
    std::size_t total = 0;
    for (const auto& e : level.entries) total += e.matrix.byte_size();
    return total;
}

}  // namespace

std::vector<std::pair<GradualPattern, OrderMatrix>> join_candidates(const Level& level) {
    std::vector<std::pair<GradualPattern, OrderMatrix>> out;
    const auto& entries = level.entries;
    if (level.k == 1) {
        for (const auto& a : entries) {
            const GradualItem first = a.pattern[0];
            if (first.variation != Variation::Up) continue;
            for (const auto& b : entries) {
                if (b.pattern[0].attribute <= first.attribute) continue;
                out.emplace_back(a.pattern.with(b.pattern[0]), and_matrices(a.matrix, b.matrix));
            }
        }
        return out;
    }

    const std::size_t prefix = level.k - 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& a = entries[i].pattern;
            const auto& b = entries[j].pattern;
            if (!same_prefix(a, b, prefix)) break;  // entries are sorted, so the prefix group has ended
            const GradualItem tail = b[prefix];
            if (tail.attribute == a[prefix].attribute) continue;
            out.emplace_back(a.with(tail), and_matrices(entries[i].matrix, entries[j].matrix));
        }
    }
    return out;
}

MiningResult mine_graank(const NumericDataset& d, const GraankConfig& cfg) {
    if (!(cfg.sigma > 0.0 && cfg.sigma <= 1.0)) throw Error("sigma must lie in (0, 1]");
    const std::size_t n = d.rows();
    MemoryTracker mem;
    MiningResult result;
    result.algorithm = "graank";

    Level level{1, {}};
    for (std::uint32_t a = 0; a < d.cols(); ++a) {
        for (Variation v : {Variation::Up, Variation::Down}) {
            GradualItem item{a, v};
            OrderMatrix m = build_order_matrix(d, item);
            mem.allocate(m.byte_size());
            const double s = support_of(m, n);
            if (s >= cfg.sigma) {
                level.entries.push_back({GradualPattern{item}, std::move(m), s});
            } else {
                mem.release(m.byte_size());
            }
        }
    }
    std::sort(level.entries.begin(), level.entries.end(),
              [](const LevelEntry& x, const LevelEntry& y) { return x.pattern < y.pattern; });

    while (!level.entries.empty()) {
        std::set<GradualPattern> frequent;
        for (const auto& e : level.entries) frequent.insert(e.pattern);

        auto candidates = join_candidates(level);
        result.candidates_generated += candidates.size();
        if (candidates.size() > cfg.max_candidates_per_level) {
            throw CandidateLimitError("graank: level " + std::to_string(level.k + 1) + " generated " +
                                      std::to_string(candidates.size()) + " candidates (limit " +
                                      std::to_string(cfg.max_candidates_per_level) + ")");
        }
        std::size_t candidate_bytes = 0;
        for (const auto& c : candidates) candidate_bytes += c.second.byte_size();
        mem.allocate(candidate_bytes);
        ++result.iterations;

        Level next{level.k + 1, {}};
        for (auto& [pattern, matrix] : candidates) {
            // The two parents are known frequent; check the remaining k-subsets.
            bool pruned = false;
            for (std::size_t drop = 0; drop + 2 < pattern.size() && !pruned; ++drop) {
                pruned = !frequent.count(canonicalize(pattern.without(drop)));
            }
            if (pruned) continue;
            ++result.candidates_evaluated;
            const double s = support_of(matrix, n);
            if (s >= cfg.sigma) {
                result.patterns.push_back({pattern, s});
                next.entries.push_back({pattern, std::move(matrix), s});
            }
        }
        std::sort(next.entries.begin(), next.entries.end(),
                  [](const LevelEntry& x, const LevelEntry& y) { return x.pattern < y.pattern; });

        mem.release(candidate_bytes - level_bytes(next));
        mem.release(level_bytes(level));
        level = std::move(next);
    }

    sort_patterns(result.patterns);
    if (cfg.maximal_only) result.patterns = maximal_only(result.patterns);
    result.peak_tracked_bytes = mem.peak();
    return result;
}

}  // namespace gradual
