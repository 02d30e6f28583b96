#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace gradual {

struct EvoConfig {
    double sigma = 0.5;
    std::size_t max_iter = 100;
    std::size_t pop_size = 50;
    double pc = 0.5;
    /// Per-component reset probability; negative means 1/m.
    double mutation_rate = -1.0;
    double c1 = 0.5;
    double c2 = 0.5;
    double inertia = 0.7;
    std::uint64_t seed = 0;
    /// Generations with neither a better best cost nor a new valid pattern
    /// before stopping; 0 runs all max_iter generations.
    std::size_t stall_window = 0;

    void validate() const;
    /// Offspring per generation, round(pc * pop_size).
    std::size_t offspring() const;
};

/// One individual: m components in [0, 1).
struct PositionVector {
    std::vector<double> v;
};

/// Component < 1/3 selects Down, >= 2/3 selects Up, anything between leaves
/// the attribute out. The result is canonical.
GradualPattern decode(std::span<const double> v);

inline GradualPattern decode(const PositionVector& p) { return decode(p.v); }

struct FitnessValue {
    double cost = 2.0;
    bool valid = false;
    double support = 0.0;
};

/// Cost 1 - support for a valid pattern (>= 2 items and support >= sigma),
/// 2 - support otherwise, so every valid cost sits below every invalid one.
/// Supports are cached per decoded pattern.
class FitnessEvaluator {
public:
    FitnessEvaluator(const NumericDataset& d, double sigma) : d_(d), sigma_(sigma) {}

    FitnessValue operator()(std::span<const double> v);
    FitnessValue of(const GradualPattern& p);

    std::size_t distinct_evaluations() const noexcept { return cache_.size(); }
    std::size_t lookups() const noexcept { return lookups_; }

private:
    const NumericDataset& d_;
    double sigma_;
    std::map<GradualPattern, double> cache_;
    std::size_t lookups_ = 0;
};

FitnessValue fitness(const NumericDataset& d, std::span<const double> v, double sigma);

/// Reflects x back into [0, 1) across the interval ends.
double reflect_unit(double x);

MiningResult mine_ga(const NumericDataset& d, const EvoConfig& cfg);
MiningResult mine_pso(const NumericDataset& d, const EvoConfig& cfg);

}  // namespace gradual
