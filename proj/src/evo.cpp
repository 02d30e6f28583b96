#include "gradual/evo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gradual {

void EvoConfig::validate() const {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw Error("evo: sigma must lie in (0, 1]");
    if (max_iter < 1) throw Error("evo: max_iter must be >= 1");
    if (pop_size < 2) throw Error("evo: pop_size must be >= 2");
    if (!(pc > 0.0 && pc <= 1.0)) throw Error("evo: pc must lie in (0, 1]");
    if (mutation_rate > 1.0) throw Error("evo: mutation_rate must be <= 1");
    if (c1 < 0.0 || c2 < 0.0) throw Error("evo: c1 and c2 must be non-negative");
}

std::size_t EvoConfig::offspring() const {
    return static_cast<std::size_t>(std::llround(pc * static_cast<double>(pop_size)));
}

GradualPattern decode(std::span<const double> v) {
    std::vector<GradualItem> items;
    for (std::uint32_t a = 0; a < v.size(); ++a) {
        if (v[a] < 1.0 / 3.0) {
            items.push_back({a, Variation::Down});
        } else if (v[a] >= 2.0 / 3.0) {
            items.push_back({a, Variation::Up});
        }
    }
    return canonicalize(GradualPattern(std::move(items)));
}

FitnessValue FitnessEvaluator::of(const GradualPattern& p) {
    ++lookups_;
    double support = 0.0;
    if (!p.empty()) {
        auto it = cache_.find(p);
        if (it == cache_.end()) it = cache_.emplace(p, pattern_support(d_, p)).first;
        support = it->second;
    }
    const bool valid = p.size() >= 2 && support >= sigma_;
    return {valid ? 1.0 - support : 2.0 - support, valid, support};
}

FitnessValue FitnessEvaluator::operator()(std::span<const double> v) { return of(decode(v)); }

FitnessValue fitness(const NumericDataset& d, std::span<const double> v, double sigma) {
    FitnessEvaluator eval(d, sigma);
    return eval(v);
}

double reflect_unit(double x) {
    double y = std::fmod(x, 2.0);
    if (y < 0.0) y += 2.0;
    if (y >= 1.0) y = 2.0 - y;
    if (y >= 1.0) y = std::nextafter(1.0, 0.0);
    return y;
}

namespace {

struct Individual {
    std::vector<double> position;
    FitnessValue fit;
};

/// Shared bookkeeping: distinct valid patterns, best-cost trajectory, stall.
class Archive {
public:
    Archive(const NumericDataset& d, const EvoConfig& cfg, MiningResult& out)
        : eval_(d, cfg.sigma), cfg_(cfg), out_(out) {}

    FitnessValue evaluate(const std::vector<double>& position) {
        ++out_.candidates_generated;
        const GradualPattern p = decode(position);
        const FitnessValue f = eval_.of(p);
        if (f.valid && std::find_if(out_.patterns.begin(), out_.patterns.end(),
                                    [&](const SupportedPattern& s) { return s.pattern == p; }) == out_.patterns.end()) {
            out_.patterns.push_back({p, f.support});
            improved_ = true;
        }
        return f;
    }

    /// Records the generation's best cost; true when the run should stop.
    bool close_generation(double best) {
        ++out_.iterations;
        if (out_.best_costs.empty() || best < out_.best_costs.back()) improved_ = true;
        out_.best_costs.push_back(out_.best_costs.empty() ? best : std::min(best, out_.best_costs.back()));
        stall_ = improved_ ? 0 : stall_ + 1;
        improved_ = false;
        return cfg_.stall_window > 0 && stall_ >= cfg_.stall_window;
    }

    void finish(std::size_t tracked_bytes) {
        out_.candidates_evaluated = eval_.distinct_evaluations();
        out_.peak_tracked_bytes = tracked_bytes;
        sort_patterns(out_.patterns);
    }

private:
    FitnessEvaluator eval_;
    const EvoConfig& cfg_;
    MiningResult& out_;
    bool improved_ = false;
    std::size_t stall_ = 0;
};

std::vector<double> random_position(std::size_t m, Rng& rng) {
    std::vector<double> v(m);
    for (auto& x : v) x = rng.uniform();
    return v;
}

std::size_t roulette(const std::vector<Individual>& pop, Rng& rng) {
    // Weight 2 - cost: valid individuals weigh in [1, 2], invalid ones below 1.
    double total = 0.0;
    for (const auto& ind : pop) total += 2.0 - ind.fit.cost;
    if (total <= 0.0) return rng.index(pop.size());
    const double target = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        acc += 2.0 - pop[i].fit.cost;
        if (target < acc) return i;
    }
    return pop.size() - 1;
}

std::size_t tracked_bytes(const NumericDataset& d, std::size_t individuals, std::size_t vectors_each) {
    const std::size_t matrix = d.rows() * ((d.rows() + 63) / 64) * sizeof(std::uint64_t);
    return individuals * vectors_each * d.cols() * sizeof(double) + matrix;
}

}  // namespace

MiningResult mine_ga(const NumericDataset& d, const EvoConfig& cfg) {
    cfg.validate();
    MiningResult result;
    result.algorithm = "ga";
    result.seed = cfg.seed;
    Rng rng(cfg.seed);
    Archive archive(d, cfg, result);

    const std::size_t m = d.cols();
    const double mutation = cfg.mutation_rate < 0.0 ? 1.0 / static_cast<double>(m) : cfg.mutation_rate;
    const std::size_t children = cfg.offspring();

    std::vector<Individual> pop(cfg.pop_size);
    for (auto& ind : pop) {
        ind.position = random_position(m, rng);
        ind.fit = archive.evaluate(ind.position);
    }
    auto by_cost = [](const Individual& a, const Individual& b) { return a.fit.cost < b.fit.cost; };
    std::stable_sort(pop.begin(), pop.end(), by_cost);

    for (std::size_t gen = 0; gen < cfg.max_iter; ++gen) {
        std::vector<Individual> offspring;
        offspring.reserve(children + 1);
        while (offspring.size() < children) {
            const auto& p1 = pop[roulette(pop, rng)].position;
            const auto& p2 = pop[roulette(pop, rng)].position;
            const std::size_t cut = 1 + rng.index(m - 1);
            std::vector<double> c1(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(cut));
            std::vector<double> c2(p2.begin(), p2.begin() + static_cast<std::ptrdiff_t>(cut));
            c1.insert(c1.end(), p2.begin() + static_cast<std::ptrdiff_t>(cut), p2.end());
            c2.insert(c2.end(), p1.begin() + static_cast<std::ptrdiff_t>(cut), p1.end());
            for (auto* child : {&c1, &c2}) {
                if (offspring.size() == children) break;
                for (auto& x : *child) {
                    if (rng.uniform() < mutation) x = rng.uniform();
                }
                Individual ind{std::move(*child), {}};
                ind.fit = archive.evaluate(ind.position);
                offspring.push_back(std::move(ind));
            }
        }
        pop.insert(pop.end(), std::make_move_iterator(offspring.begin()), std::make_move_iterator(offspring.end()));
        std::stable_sort(pop.begin(), pop.end(), by_cost);
        pop.resize(cfg.pop_size);
        if (archive.close_generation(pop.front().fit.cost)) break;
    }

    archive.finish(tracked_bytes(d, cfg.pop_size + children, 1));
    return result;
}

MiningResult mine_pso(const NumericDataset& d, const EvoConfig& cfg) {
    cfg.validate();
    MiningResult result;
    result.algorithm = "pso";
    result.seed = cfg.seed;
    Rng rng(cfg.seed);
    Archive archive(d, cfg, result);

    const std::size_t m = d.cols();
    struct Particle {
        std::vector<double> x, velocity, best;
        double best_cost = 2.0;
    };
    std::vector<Particle> swarm(cfg.pop_size);
    std::vector<double> global_best;
    double global_cost = std::numeric_limits<double>::infinity();
    for (auto& p : swarm) {
        p.x = random_position(m, rng);
        p.velocity.assign(m, 0.0);
        p.best = p.x;
        p.best_cost = archive.evaluate(p.x).cost;
        if (p.best_cost < global_cost) {
            global_cost = p.best_cost;
            global_best = p.best;
        }
    }

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        for (auto& p : swarm) {
            for (std::size_t k = 0; k < m; ++k) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                p.velocity[k] = cfg.inertia * p.velocity[k] + cfg.c1 * r1 * (p.best[k] - p.x[k]) +
                                cfg.c2 * r2 * (global_best[k] - p.x[k]);
                p.x[k] = reflect_unit(p.x[k] + p.velocity[k]);
            }
            const double cost = archive.evaluate(p.x).cost;
            if (cost < p.best_cost) {
                p.best_cost = cost;
                p.best = p.x;
            }
        }
        // Global best is refreshed once per iteration from the personal bests.
        for (const auto& p : swarm) {
            if (p.best_cost < global_cost) {
                global_cost = p.best_cost;
                global_best = p.best;
            }
        }
        if (archive.close_generation(global_cost)) break;
    }

    archive.finish(tracked_bytes(d, cfg.pop_size, 3));
    return result;
}

}  // namespace gradual
