#include "gradual/paraminer.hpp"

#include <algorithm>
#include <bit>

namespace gradual {

TransactionalDataset encode_transactions(const NumericDataset& d) {
    TransactionalDataset t;
    t.n = d.rows();
    t.transactions.reserve(pair_count(t.n));
    for (std::uint32_t i = 0; i < t.n; ++i) {
        for (std::uint32_t j = i + 1; j < t.n; ++j) {
            Transaction tr{{i, j}, {}};
            for (std::uint32_t a = 0; a < d.cols(); ++a) {
                const double vi = d.value(i, a);
                const double vj = d.value(j, a);
                if (vi < vj) {
                    tr.items.push_back({a, Variation::Up});
                } else if (vi > vj) {
                    tr.items.push_back({a, Variation::Down});
                }
            }
            const auto tid = static_cast<std::uint32_t>(t.transactions.size());
            for (const auto& it : tr.items) t.items_to_tids[it].push_back(tid);
            t.transactions.push_back(std::move(tr));
        }
    }
    return t;
}

ReducedDataset reduce_dataset(const TransactionalDataset& t, std::size_t min_len) {
    if (min_len < 1) throw Error("minimum tid length must be >= 1");
    ReducedDataset r;
    r.n = t.n;
    r.pairs.reserve(t.transactions.size());
    std::map<std::vector<GradualItem>, std::size_t> group_of;
    for (std::uint32_t tid = 0; tid < t.transactions.size(); ++tid) {
        const auto& tr = t.transactions[tid];
        r.pairs.push_back(tr.pair);
        auto [it, inserted] = group_of.try_emplace(tr.items, r.groups.size());
        if (inserted) r.groups.push_back({{}, 0, tr.items});
        auto& g = r.groups[it->second];
        g.tids.push_back(tid);
        ++g.weight;
    }
    for (const auto& [item, tids] : t.items_to_tids) {
        if (tids.size() >= min_len) r.items_to_tids.emplace(item, tids);
    }
    return r;
}

namespace {

/// Fixed-width bitset over dense item indices.
class ItemBits {
public:
    explicit ItemBits(std::size_t words = 0) : w_(words, 0) {}

    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    void intersect(const ItemBits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }
    /// True when both agree on every index below `limit`.
    bool same_below(const ItemBits& o, std::size_t limit) const {
        for (std::size_t k = 0; k * 64 < limit; ++k) {
            std::uint64_t mask = ~std::uint64_t{0};
            if ((k + 1) * 64 > limit) mask = (std::uint64_t{1} << (limit % 64)) - 1;
            if ((w_[k] ^ o.w_[k]) & mask) return false;
        }
        return true;
    }
    std::size_t byte_size() const { return w_.size() * sizeof(std::uint64_t); }

    friend auto operator<=>(const ItemBits&, const ItemBits&) = default;

private:
    std::vector<std::uint64_t> w_;
};

struct Group {
    ItemBits items;
    std::size_t weight = 0;
};

class ClosedMiner {
public:
    ClosedMiner(std::vector<Group> groups, std::size_t item_count, std::size_t min_weight, std::size_t pairs,
                std::size_t max_closures, MemoryTracker& mem, MiningResult& out)
        : groups_(std::move(groups)),
          items_(item_count),
          min_weight_(min_weight),
          pairs_(pairs),
          max_closures_(max_closures),
          mem_(mem),
          out_(out) {}

    void run() {
        std::vector<std::uint32_t> all(groups_.size());
        std::size_t total = 0;
        for (std::uint32_t g = 0; g < groups_.size(); ++g) {
            all[g] = g;
            total += groups_[g].weight;
        }
        if (all.empty() || total < min_weight_) return;
        ItemBits root = closure(all);
        emit(root, total);
        extend(root, all, 0);
    }

private:
    ItemBits closure(const std::vector<std::uint32_t>& occ) {
        if (++closures_ > max_closures_) {
            throw WorkLimitError("paraminer: closure budget of " + std::to_string(max_closures_) + " exceeded");
        }
        ItemBits q = groups_[occ.front()].items;
        for (std::size_t k = 1; k < occ.size(); ++k) q.intersect(groups_[occ[k]].items);
        return q;
    }

    void emit(const ItemBits& closed, std::size_t weight) {
        if (closed.count() < 2) return;
        std::vector<GradualItem> items;
        for (std::size_t i = 0; i < items_; ++i) {
            if (closed.test(i)) items.push_back(item_from_index(i));
        }
        GradualPattern p(std::move(items));
        // The mirror of every closed set is closed with the same weight; keep one.
        if (!is_canonical(p)) return;
        out_.patterns.push_back({std::move(p), static_cast<double>(weight) / static_cast<double>(pairs_)});
    }

    void extend(const ItemBits& prefix, const std::vector<std::uint32_t>& occ, std::size_t first_item) {
        ++out_.iterations;
        for (std::size_t e = first_item; e < items_; ++e) {
            if (prefix.test(e)) continue;
            std::vector<std::uint32_t> sub;
            std::size_t weight = 0;
            for (auto g : occ) {
                if (groups_[g].items.test(e)) {
                    sub.push_back(g);
                    weight += groups_[g].weight;
                }
            }
            ++out_.candidates_generated;
            if (weight < min_weight_) continue;
            ++out_.candidates_evaluated;
            ItemBits q = closure(sub);
            if (!q.same_below(prefix, e)) continue;  // not the first parent of q
            const std::size_t bytes = sub.capacity() * sizeof(std::uint32_t) + q.byte_size();
            mem_.allocate(bytes);
            emit(q, weight);
            extend(q, sub, e + 1);
            mem_.release(bytes);
        }
    }

    std::vector<Group> groups_;
    std::size_t items_;
    std::size_t min_weight_;
    std::size_t pairs_;
    std::size_t max_closures_;
    std::size_t closures_ = 0;
    MemoryTracker& mem_;
    MiningResult& out_;
};

std::size_t transactional_bytes(const TransactionalDataset& t) {
    std::size_t bytes = t.transactions.capacity() * sizeof(Transaction);
    for (const auto& tr : t.transactions) bytes += tr.items.capacity() * sizeof(GradualItem);
    for (const auto& [item, tids] : t.items_to_tids) bytes += sizeof(item) + tids.capacity() * sizeof(std::uint32_t);
    return bytes;
}

}  // namespace

MiningResult mine_paraminer(const NumericDataset& d, const ParaminerConfig& cfg) {
    if (!(cfg.sigma > 0.0 && cfg.sigma <= 1.0)) throw Error("sigma must lie in (0, 1]");
    MiningResult result;
    result.algorithm = "paraminer";
    MemoryTracker mem;

    const std::size_t n = d.rows();
    const std::size_t pairs = pair_count(n);
    const std::size_t min_weight = min_concordant_count(cfg.sigma, n);
    const std::size_t item_count = d.cols() * 2;
    const std::size_t words = (item_count + 63) / 64;

    const TransactionalDataset encoded = encode_transactions(d);
    mem.allocate(transactional_bytes(encoded));

    // Item supports over both reading directions of every pair; the mirror of
    // (a, Up) in t(i, j) is (a, Down) in t(j, i).
    std::vector<std::size_t> item_support(item_count, 0);
    for (const auto& [item, tids] : encoded.items_to_tids) {
        item_support[item_index(item)] += tids.size();
        item_support[item_index({item.attribute, flip(item.variation)})] += tids.size();
    }

    std::map<ItemBits, std::size_t> group_of;
    std::vector<Group> groups;
    auto add = [&](const Transaction& tr, bool mirrored) {
        ItemBits bits(words);
        for (const auto& it : tr.items) {
            const GradualItem item = mirrored ? GradualItem{it.attribute, flip(it.variation)} : it;
            const auto idx = item_index(item);
            if (item_support[idx] >= min_weight) bits.set(idx);
        }
        auto [pos, inserted] = group_of.try_emplace(bits, groups.size());
        if (inserted) groups.push_back({bits, 0});
        ++groups[pos->second].weight;
    };
    for (const auto& tr : encoded.transactions) {
        add(tr, false);
        add(tr, true);
    }
    std::size_t group_bytes = 0;
    for (const auto& g : groups) group_bytes += g.items.byte_size() + sizeof(Group);
    mem.allocate(group_bytes);

    ClosedMiner miner(std::move(groups), item_count, min_weight, pairs, cfg.max_closures, mem, result);
    miner.run();

    sort_patterns(result.patterns);
    result.peak_tracked_bytes = mem.peak();
    return result;
}

}  // namespace gradual
