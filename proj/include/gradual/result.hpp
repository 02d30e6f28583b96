#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradual/core.hpp"

namespace gradual {

/// Seedable generator whose output is identical across platforms: draws come
/// straight from mt19937_64 and are converted without std distributions,
/// whose algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound must be positive.
    std::size_t index(std::size_t bound);

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

/// Byte accounting of a miner's own structures (order matrices, tid lists,
/// pheromone and cost matrices, populations). It is a proxy for memory use,
/// not process RSS.
class MemoryTracker {
public:
    void allocate(std::size_t bytes) noexcept {
        current_ += bytes;
        if (current_ > peak_) peak_ = current_;
    }
    void release(std::size_t bytes) noexcept { current_ = bytes > current_ ? 0 : current_ - bytes; }
    std::size_t current() const noexcept { return current_; }
    std::size_t peak() const noexcept { return peak_; }

private:
    std::size_t current_ = 0;
    std::size_t peak_ = 0;
};

struct MiningResult {
    std::string algorithm;
    std::vector<SupportedPattern> patterns;
    std::size_t iterations = 0;
    std::size_t candidates_generated = 0;
    std::size_t candidates_evaluated = 0;
    double wall_time = 0.0;
    std::size_t peak_tracked_bytes = 0;
    std::uint64_t seed = 0;
    /// Best cost per generation; only the population-based miners fill it.
    std::vector<double> best_costs;

    friend bool operator==(const MiningResult&, const MiningResult&) = default;
};

/// Sorts patterns into a stable order (by pattern, lexicographic on items).
void sort_patterns(std::vector<SupportedPattern>& patterns);

/// Keeps only patterns with no strict superset among the others.
std::vector<SupportedPattern> maximal_only(const std::vector<SupportedPattern>& patterns);

/// Recomputes each pattern's support with the bitmap kernel and returns the
/// patterns that fall below sigma or have fewer than two items.
std::vector<SupportedPattern> failed_support_recheck(const NumericDataset& d, const MiningResult& r, double sigma);

std::string to_json(const MiningResult& r, const NumericDataset* names = nullptr);
MiningResult mining_result_from_json(const std::string& text);

}  // namespace gradual
