#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/paraminer.hpp"
#include "gradual/result.hpp"

namespace gradual {

struct AcoConfig {
    double sigma = 0.5;
    std::size_t max_iter = 100;
    double rho = 0.5;
    double alpha = 1.0;
    double tau_min = 1.0;
    double tau_max = 1e6;
    std::uint64_t seed = 0;
    /// Consecutive iterations without an unseen candidate before stopping.
    std::size_t stall_window = 5;
    /// Resampling attempts per iteration before the sampler reports stagnation.
    std::size_t max_retries = 100;
    /// Tuple pairs drawn per ACO-ParaMiner iteration.
    std::size_t size_budget = 2;

    void validate() const;
};

/// Choice per attribute in the q x 3 pheromone matrix.
enum class Option : std::uint8_t { Increase = 0, Decrease = 1, Irrelevant = 2 };

class PheromoneMatrix3 {
public:
    explicit PheromoneMatrix3(std::size_t attributes);

    std::size_t attributes() const noexcept { return rows_.size(); }
    double at(std::size_t attribute, Option o) const { return rows_.at(attribute)[static_cast<std::size_t>(o)]; }
    void set(std::size_t attribute, Option o, double value) { rows_.at(attribute)[static_cast<std::size_t>(o)] = value; }

    /// Selection probabilities p(a, j)^alpha / sum_k p(a, k)^alpha.
    std::array<double, 3> probabilities(std::size_t attribute, double alpha = 1.0) const;

    void evaporate(double rho, double tau_min, double tau_max);
    void deposit(const GradualPattern& valid, double tau_max);

    std::size_t byte_size() const noexcept { return rows_.size() * sizeof(rows_[0]); }

private:
    std::vector<std::array<double, 3>> rows_;
};

/// Canonical patterns measured infrequent. A candidate containing an entry,
/// or the complement of one, is infrequent by anti-monotonicity.
class RejectedStore {
public:
    void add(const GradualPattern& p);
    bool rejects(const GradualPattern& candidate) const;
    bool contains(const GradualPattern& p) const;
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const GradualPattern> entries() const noexcept { return entries_; }

private:
    std::vector<GradualPattern> entries_;
};

struct SampleStats {
    std::size_t draws = 0;
    std::size_t too_small = 0;
    std::size_t rejected_superset = 0;
};

/// Draws one option per attribute from the pheromone proportions and drops
/// the irrelevant ones. Redraws while the result has fewer than two items or
/// is rejected by the store; nullopt once max_retries draws are spent.
std::optional<GradualPattern> sample_pattern(const PheromoneMatrix3& p, Rng& rng, const RejectedStore& rejected,
                                             std::size_t max_retries, double alpha = 1.0,
                                             SampleStats* stats = nullptr);

/// Support check of a whole candidate. Infrequent candidates go to `rejected`.
std::optional<SupportedPattern> evaluate_pattern(const NumericDataset& d, const GradualPattern& p, double sigma,
                                                 RejectedStore& rejected);

/// Item-by-item validation of a generated solution: items are ANDed in
/// attribute order and an item that would pull support below sigma is left
/// out. Each failing prefix is recorded in `rejected`. Returns the surviving
/// sub-pattern when it has at least two items.
std::optional<SupportedPattern> refine_pattern(const NumericDataset& d, std::span<const OrderMatrix> item_matrices,
                                               const GradualPattern& p, double sigma, RejectedStore& rejected);

/// One iteration's update: decay every entry by (1 - rho), deposit +1 per
/// item of each valid pattern, clamp into [tau_min, tau_max].
void update_pheromones_bfs(PheromoneMatrix3& p, std::span<const GradualPattern> valid, const AcoConfig& cfg);

MiningResult mine_aco_graank(const NumericDataset& d, const AcoConfig& cfg);

/// Pheromone over tuple pairs; only cells (i, j) with i < j are used.
class PheromoneMatrixN {
public:
    explicit PheromoneMatrixN(std::size_t n) : n_(n), v_(n * n, 1.0) {}

    std::size_t size() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double value) { v_[i * n_ + j] = value; }
    std::size_t byte_size() const noexcept { return v_.size() * sizeof(double); }

private:
    std::size_t n_;
    std::vector<double> v_;
};

class CostMatrix {
public:
    explicit CostMatrix(std::size_t n) : n_(n), v_(n * n, 1.0) {}

    std::size_t size() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double value) { v_[i * n_ + j] = value; }
    std::size_t byte_size() const noexcept { return v_.size() * sizeof(double); }

private:
    std::size_t n_;
    std::vector<double> v_;
};

/// C(i, j) = 1 / (1 + occurrences of t(ri, rj) across the surviving items'
/// tid lists); every other cell keeps the initial value 1.
CostMatrix build_cost_matrix(const ReducedDataset& t, std::size_t n);

/// Upper-triangle pairs in row-major order: (0,1), (0,2), ..., (n-2, n-1).
std::vector<RowPair> candidate_pairs(std::size_t n);

/// Normalized selection weights tau(i,j)^alpha / C(i,j) over candidate_pairs(n).
std::vector<double> node_weights(const PheromoneMatrixN& pheromone, const CostMatrix& cost, double alpha = 1.0);

/// Draws up to size_budget distinct pairs, each draw proportional to the
/// node weights of the pairs not yet drawn.
std::vector<RowPair> sample_node_set(const PheromoneMatrixN& pheromone, const CostMatrix& cost, Rng& rng,
                                     std::size_t size_budget, double alpha = 1.0);

MiningResult mine_aco_paraminer(const NumericDataset& d, const AcoConfig& cfg);

}  // namespace gradual
