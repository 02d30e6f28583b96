#include "gradual/result.hpp"

#include <algorithm>
#include <limits>
#include <json.hpp>

namespace gradual {

std::size_t Rng::index(std::size_t bound) {
    if (bound == 0) throw Error("Rng::index requires a positive bound");
    // Reject the tail of the range so the modulo is unbiased.
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
}

void sort_patterns(std::vector<SupportedPattern>& patterns) {
    std::sort(patterns.begin(), patterns.end(),
              [](const SupportedPattern& a, const SupportedPattern& b) { return a.pattern < b.pattern; });
}

std::vector<SupportedPattern> maximal_only(const std::vector<SupportedPattern>& patterns) {
    std::vector<SupportedPattern> out;
    for (const auto& p : patterns) {
        const bool dominated = std::any_of(patterns.begin(), patterns.end(), [&](const SupportedPattern& q) {
            return q.pattern.size() > p.pattern.size() &&
                   (p.pattern.is_subset_of(q.pattern) || complement(p.pattern).is_subset_of(q.pattern));
        });
        if (!dominated) out.push_back(p);
    }
    return out;
}

std::vector<SupportedPattern> failed_support_recheck(const NumericDataset& d, const MiningResult& r, double sigma) {
    std::vector<SupportedPattern> failed;
    for (const auto& p : r.patterns) {
        if (p.pattern.size() < 2 || pattern_support(d, p.pattern) < sigma) failed.push_back(p);
    }
    return failed;
}

namespace {

nlohmann::json pattern_json(const SupportedPattern& p, const NumericDataset* names) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : p.pattern.items()) {
        nlohmann::json item = {{"attribute", it.attribute},
                               {"variation", std::string(1, variation_symbol(it.variation))}};
        if (names) item["name"] = names->attribute_names()[it.attribute];
        items.push_back(std::move(item));
    }
    return {{"items", std::move(items)}, {"support", p.support}};
}

}  // namespace

std::string to_json(const MiningResult& r, const NumericDataset* names) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& p : r.patterns) patterns.push_back(pattern_json(p, names));
    nlohmann::json j = {
        {"algorithm", r.algorithm},
        {"seed", r.seed},
        {"iterations", r.iterations},
        {"candidates_generated", r.candidates_generated},
        {"candidates_evaluated", r.candidates_evaluated},
        {"wall_time", r.wall_time},
        {"peak_tracked_bytes", r.peak_tracked_bytes},
        {"best_costs", r.best_costs},
        {"patterns", std::move(patterns)},
    };
    return j.dump(2);
}

MiningResult mining_result_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    MiningResult r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.iterations = j.at("iterations").get<std::size_t>();
    r.candidates_generated = j.at("candidates_generated").get<std::size_t>();
    r.candidates_evaluated = j.at("candidates_evaluated").get<std::size_t>();
    r.wall_time = j.at("wall_time").get<double>();
    r.peak_tracked_bytes = j.at("peak_tracked_bytes").get<std::size_t>();
    r.best_costs = j.at("best_costs").get<std::vector<double>>();
    for (const auto& pj : j.at("patterns")) {
        std::vector<GradualItem> items;
        for (const auto& ij : pj.at("items")) {
            const auto v = ij.at("variation").get<std::string>();
            items.push_back({ij.at("attribute").get<std::uint32_t>(), v == "+" ? Variation::Up : Variation::Down});
        }
        r.patterns.push_back({GradualPattern(std::move(items)), pj.at("support").get<double>()});
    }
    return r;
}

}  // namespace gradual
