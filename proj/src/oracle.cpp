#include "gradual/oracle.hpp"

#include <algorithm>
#include <map>

namespace gradual::oracle {
namespace {

bool respects(const NumericDataset& d, const GradualPattern& p, std::size_t x, std::size_t y) {
    for (const auto& it : p.items()) {
        const double a = d.value(x, it.attribute);
        const double b = d.value(y, it.attribute);
        if (it.variation == Variation::Up ? !(a < b) : !(a > b)) return false;
    }
    return true;
}

double ratio(std::size_t count, std::size_t n) {
    return static_cast<double>(count) / static_cast<double>(n * (n - 1) / 2);
}

/// All patterns over the attributes (any orientation, including singletons),
/// keyed by pattern, with their concordant-pair counts.
std::map<GradualPattern, std::size_t> all_counts(const NumericDataset& d, std::size_t max_m) {
    const std::size_t m = d.cols();
    if (m > max_m) {
        throw Error("oracle guard: m = " + std::to_string(m) + " exceeds max_m = " + std::to_string(max_m));
    }
    std::size_t space = 1;
    for (std::size_t i = 0; i < m; ++i) space *= 3;

    std::map<GradualPattern, std::size_t> counts;
    for (std::size_t code = 1; code < space; ++code) {
        std::vector<GradualItem> items;
        std::size_t c = code;
        for (std::uint32_t a = 0; a < m; ++a, c /= 3) {
            if (c % 3 == 1) items.push_back({a, Variation::Up});
            if (c % 3 == 2) items.push_back({a, Variation::Down});
        }
        GradualPattern p(std::move(items));
        counts.emplace(p, respecting_pairs(d, p).size());
    }
    return counts;
}

}  // namespace

std::vector<std::size_t> respecting_pairs(const NumericDataset& d, const GradualPattern& p) {
    std::vector<std::size_t> out;
    const std::size_t n = d.rows();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && respects(d, p, x, y)) out.push_back(x * n + y);
        }
    }
    return out;
}

double brute_support(const NumericDataset& d, const GradualPattern& p) {
    return ratio(respecting_pairs(d, p).size(), d.rows());
}

std::vector<Entry> OracleResult::closed() const {
    std::vector<Entry> out;
    std::copy_if(frequent.begin(), frequent.end(), std::back_inserter(out), [](const Entry& e) { return e.closed; });
    return out;
}

OracleResult enumerate_frequent(const NumericDataset& d, double sigma, std::size_t max_m) {
    const auto counts = all_counts(d, max_m);
    const std::size_t n = d.rows();
    OracleResult result;
    for (const auto& [p, count] : counts) {
        if (p.size() < 2 || p[0].variation != Variation::Up) continue;
        if (ratio(count, n) < sigma) continue;
        // Extensions only ever lose pairs, so equal counts mean equal pair sets.
        bool closed = true;
        for (std::uint32_t a = 0; a < d.cols() && closed; ++a) {
            if (p.has_attribute(a)) continue;
            for (Variation v : {Variation::Up, Variation::Down}) {
                if (counts.at(p.with({a, v})) == count) closed = false;
            }
        }
        result.frequent.push_back({p, ratio(count, n), count, closed});
    }
    return result;
}

std::size_t count_join_candidates(const NumericDataset& d, double sigma, std::size_t max_m) {
    const auto counts = all_counts(d, max_m);
    const std::size_t n = d.rows();
    auto frequent = [&](const GradualPattern& p) { return ratio(counts.at(p), n) >= sigma; };
    std::size_t total = 0;
    for (const auto& [p, count] : counts) {
        if (p.size() < 2 || p[0].variation != Variation::Up) continue;
        bool all_subsets = true;
        for (std::size_t drop = 0; drop < p.size() && all_subsets; ++drop) {
            all_subsets = frequent(p.without(drop));
        }
        if (all_subsets) ++total;
    }
    return total;
}

}  // namespace gradual::oracle
