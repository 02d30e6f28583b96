#include "gradual/aco.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace gradual {

void AcoConfig::validate() const {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw Error("aco: sigma must lie in (0, 1]");
    if (max_iter < 1) throw Error("aco: max_iter must be >= 1");
    if (!(rho >= 0.0 && rho < 1.0)) throw Error("aco: rho must lie in [0, 1)");
    if (!(alpha > 0.0)) throw Error("aco: alpha must be positive");
    if (!(tau_min > 0.0 && tau_min <= tau_max)) throw Error("aco: need 0 < tau_min <= tau_max");
    if (max_retries < 1) throw Error("aco: max_retries must be >= 1");
    if (size_budget < 1) throw Error("aco: size_budget must be >= 1");
}

PheromoneMatrix3::PheromoneMatrix3(std::size_t attributes) : rows_(attributes, {1.0, 1.0, 1.0}) {}

std::array<double, 3> PheromoneMatrix3::probabilities(std::size_t attribute, double alpha) const {
    const auto& row = rows_.at(attribute);
    std::array<double, 3> p{};
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        p[j] = alpha == 1.0 ? row[j] : std::pow(row[j], alpha);
        total += p[j];
    }
    for (auto& x : p) x /= total;
    return p;
}

void PheromoneMatrix3::evaporate(double rho, double tau_min, double tau_max) {
    for (auto& row : rows_) {
        for (auto& v : row) v = std::clamp(v * (1.0 - rho), tau_min, tau_max);
    }
}

void PheromoneMatrix3::deposit(const GradualPattern& valid, double tau_max) {
    for (const auto& it : valid.items()) {
        auto& v = rows_.at(it.attribute)[it.variation == Variation::Up ? 0 : 1];
        v = std::min(v + 1.0, tau_max);
    }
}

void RejectedStore::add(const GradualPattern& p) {
    auto c = canonicalize(p);
    if (!contains(c)) entries_.push_back(std::move(c));
}

bool RejectedStore::contains(const GradualPattern& p) const {
    return std::find(entries_.begin(), entries_.end(), canonicalize(p)) != entries_.end();
}

bool RejectedStore::rejects(const GradualPattern& candidate) const {
    const auto flipped = complement(candidate);
    return std::any_of(entries_.begin(), entries_.end(), [&](const GradualPattern& r) {
        return r.is_subset_of(candidate) || r.is_subset_of(flipped);
    });
}

std::optional<GradualPattern> sample_pattern(const PheromoneMatrix3& p, Rng& rng, const RejectedStore& rejected,
                                             std::size_t max_retries, double alpha, SampleStats* stats) {
    SampleStats local;
    SampleStats& s = stats ? *stats : local;
    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        ++s.draws;
        std::vector<GradualItem> items;
        for (std::uint32_t a = 0; a < p.attributes(); ++a) {
            const auto prob = p.probabilities(a, alpha);
            const double u = rng.uniform();
            if (u < prob[0]) {
                items.push_back({a, Variation::Up});
            } else if (u < prob[0] + prob[1]) {
                items.push_back({a, Variation::Down});
            }
        }
        GradualPattern candidate = canonicalize(GradualPattern(std::move(items)));
        if (candidate.size() < 2) {
            ++s.too_small;
            continue;
        }
        if (rejected.rejects(candidate)) {
            ++s.rejected_superset;
            continue;
        }
        return candidate;
    }
    return std::nullopt;
}

std::optional<SupportedPattern> evaluate_pattern(const NumericDataset& d, const GradualPattern& p, double sigma,
                                                 RejectedStore& rejected) {
    if (p.size() < 2) throw Error("evaluate_pattern requires at least two items");
    const double s = pattern_support(d, p);
    if (s >= sigma) return SupportedPattern{canonicalize(p), s};
    rejected.add(p);
    return std::nullopt;
}

std::optional<SupportedPattern> refine_pattern(const NumericDataset& d, std::span<const OrderMatrix> item_matrices,
                                               const GradualPattern& p, double sigma, RejectedStore& rejected) {
    const std::size_t n = d.rows();
    std::vector<GradualItem> kept;
    OrderMatrix acc;
    double support = 0.0;
    for (const auto& it : p.items()) {
        const OrderMatrix& m = item_matrices[item_index(it)];
        if (kept.empty()) {
            const double s = support_of(m, n);
            if (s < sigma) continue;
            acc = m;
            support = s;
            kept.push_back(it);
            continue;
        }
        OrderMatrix joined = and_matrices(acc, m);
        const double s = support_of(joined, n);
        if (s >= sigma) {
            acc = std::move(joined);
            support = s;
            kept.push_back(it);
        } else {
            auto failing = kept;
            failing.push_back(it);
            rejected.add(GradualPattern(std::move(failing)));
        }
    }
    if (kept.size() < 2) return std::nullopt;
    return SupportedPattern{canonicalize(GradualPattern(std::move(kept))), support};
}

void update_pheromones_bfs(PheromoneMatrix3& p, std::span<const GradualPattern> valid, const AcoConfig& cfg) {
    p.evaporate(cfg.rho, cfg.tau_min, cfg.tau_max);
    for (const auto& v : valid) p.deposit(v, cfg.tau_max);
}

MiningResult mine_aco_graank(const NumericDataset& d, const AcoConfig& cfg) {
    cfg.validate();
    MiningResult result;
    result.algorithm = "aco-graank";
    result.seed = cfg.seed;
    MemoryTracker mem;
    Rng rng(cfg.seed);

    std::vector<OrderMatrix> item_matrices;
    item_matrices.reserve(d.cols() * 2);
    for (std::size_t i = 0; i < d.cols() * 2; ++i) {
        item_matrices.push_back(build_order_matrix(d, item_from_index(i)));
        mem.allocate(item_matrices.back().byte_size());
    }

    // Plus one accumulator matrix used while refining a candidate.
    mem.allocate(item_matrices.front().byte_size());
    PheromoneMatrix3 pheromone(d.cols());
    mem.allocate(pheromone.byte_size());
    RejectedStore rejected;
    std::map<GradualPattern, std::optional<SupportedPattern>> outcome;
    std::set<GradualPattern> found;
    std::size_t stall = 0;

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        ++result.iterations;
        std::vector<GradualPattern> valid;
        bool fresh = false;
        if (auto candidate = sample_pattern(pheromone, rng, rejected, cfg.max_retries, cfg.alpha)) {
            ++result.candidates_generated;
            auto [pos, inserted] = outcome.try_emplace(*candidate);
            if (inserted) {
                fresh = true;
                ++result.candidates_evaluated;
                pos->second = refine_pattern(d, item_matrices, *candidate, cfg.sigma, rejected);
                if (pos->second && found.insert(pos->second->pattern).second) {
                    result.patterns.push_back(*pos->second);
                }
            }
            if (pos->second) valid.push_back(pos->second->pattern);
        }
        update_pheromones_bfs(pheromone, valid, cfg);
        stall = fresh ? 0 : stall + 1;
        if (cfg.stall_window > 0 && stall >= cfg.stall_window) break;
    }

    sort_patterns(result.patterns);
    result.peak_tracked_bytes = mem.peak();
    return result;
}

CostMatrix build_cost_matrix(const ReducedDataset& t, std::size_t n) {
    CostMatrix c(n);
    std::vector<std::size_t> count(t.pairs.size(), 0);
    for (const auto& [item, tids] : t.items_to_tids) {
        for (auto tid : tids) ++count.at(tid);
    }
    for (std::size_t tid = 0; tid < t.pairs.size(); ++tid) {
        const auto& pr = t.pairs[tid];
        if (pr.first >= n || pr.second >= n) throw Error("cost matrix: tid pair outside n x n");
        c.set(pr.first, pr.second, 1.0 / (1.0 + static_cast<double>(count[tid])));
    }
    return c;
}

std::vector<RowPair> candidate_pairs(std::size_t n) {
    std::vector<RowPair> out;
    out.reserve(pair_count(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) out.push_back({i, j});
    }
    return out;
}

namespace {

std::vector<double> raw_weights(const PheromoneMatrixN& pheromone, const CostMatrix& cost, double alpha) {
    if (pheromone.size() != cost.size()) throw Error("pheromone and cost matrices differ in size");
    std::vector<double> w;
    const std::size_t n = pheromone.size();
    w.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double tau = alpha == 1.0 ? pheromone.at(i, j) : std::pow(pheromone.at(i, j), alpha);
            w.push_back(tau / cost.at(i, j));
        }
    }
    return w;
}

std::uint32_t tid_of(RowPair p, std::size_t n) {
    const std::size_t i = p.first;
    return static_cast<std::uint32_t>(i * n - i * (i + 1) / 2 + (p.second - i - 1));
}

}  // namespace

std::vector<double> node_weights(const PheromoneMatrixN& pheromone, const CostMatrix& cost, double alpha) {
    auto w = raw_weights(pheromone, cost, alpha);
    double total = 0.0;
    for (double x : w) total += x;
    for (double& x : w) x /= total;
    return w;
}

std::vector<RowPair> sample_node_set(const PheromoneMatrixN& pheromone, const CostMatrix& cost, Rng& rng,
                                     std::size_t size_budget, double alpha) {
    auto w = raw_weights(pheromone, cost, alpha);
    const auto pairs = candidate_pairs(pheromone.size());
    std::vector<RowPair> out;
    const std::size_t draws = std::min(size_budget, pairs.size());
    for (std::size_t k = 0; k < draws; ++k) {
        double total = 0.0;
        for (double x : w) total += x;
        const double target = rng.uniform() * total;
        double acc = 0.0;
        std::size_t pick = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] <= 0.0) continue;
            acc += w[i];
            pick = i;
            if (target < acc) break;
        }
        out.push_back(pairs[pick]);
        w[pick] = 0.0;
    }
    return out;
}

MiningResult mine_aco_paraminer(const NumericDataset& d, const AcoConfig& cfg) {
    cfg.validate();
    MiningResult result;
    result.algorithm = "aco-paraminer";
    result.seed = cfg.seed;
    MemoryTracker mem;
    Rng rng(cfg.seed);

    const std::size_t n = d.rows();
    const std::size_t min_len = min_concordant_count(cfg.sigma, n);
    const TransactionalDataset encoded = encode_transactions(d);
    std::size_t encoded_bytes = encoded.transactions.capacity() * sizeof(Transaction);
    for (const auto& tr : encoded.transactions) encoded_bytes += tr.items.capacity() * sizeof(GradualItem);
    mem.allocate(encoded_bytes);
    const ReducedDataset reduced = reduce_dataset(encoded, min_len);
    for (const auto& [item, tids] : reduced.items_to_tids) mem.allocate(tids.capacity() * sizeof(std::uint32_t));

    const CostMatrix cost = build_cost_matrix(reduced, n);
    PheromoneMatrixN pheromone(n);
    mem.allocate(cost.byte_size() + pheromone.byte_size());

    std::set<std::vector<RowPair>> seen_nodes;
    std::set<GradualPattern> found;
    std::size_t stall = 0;

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        ++result.iterations;
        auto nodes = sample_node_set(pheromone, cost, rng, cfg.size_budget, cfg.alpha);
        std::sort(nodes.begin(), nodes.end());
        ++result.candidates_generated;
        const bool fresh = seen_nodes.insert(nodes).second;

        std::vector<GradualItem> items;
        std::vector<const TidList*> lists;
        for (const auto& [item, tids] : reduced.items_to_tids) {
            const bool covers = std::all_of(nodes.begin(), nodes.end(), [&](RowPair p) {
                return std::binary_search(tids.begin(), tids.end(), tid_of(p, n));
            });
            if (covers) {
                items.push_back(item);
                lists.push_back(&tids);
            }
        }

        bool emitted = false;
        if (items.size() >= 2) {
            ++result.candidates_evaluated;
            TidList inter = *lists.front();
            for (std::size_t k = 1; k < lists.size(); ++k) {
                TidList next;
                std::set_intersection(inter.begin(), inter.end(), lists[k]->begin(), lists[k]->end(),
                                      std::back_inserter(next));
                inter = std::move(next);
            }
            if (inter.size() >= min_len) {
                emitted = true;
                GradualPattern p = canonicalize(GradualPattern(std::move(items)));
                if (found.insert(p).second) result.patterns.push_back({p, support_ratio(inter.size(), n)});
                for (auto tid : inter) {
                    const auto& pr = reduced.pairs[tid];
                    pheromone.set(pr.first, pr.second, std::min(pheromone.at(pr.first, pr.second) + 1.0, cfg.tau_max));
                }
            }
        }
        if (!emitted) {
            for (const auto& pr : nodes) {
                const double v = pheromone.at(pr.first, pr.second) * (1.0 - cfg.rho);
                pheromone.set(pr.first, pr.second, std::clamp(v, cfg.tau_min, cfg.tau_max));
            }
        }

        stall = fresh ? 0 : stall + 1;
        if (cfg.stall_window > 0 && stall >= cfg.stall_window) break;
    }

    sort_patterns(result.patterns);
    result.peak_tracked_bytes = mem.peak();
    return result;
}

}  // namespace gradual
