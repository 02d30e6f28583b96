#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace gradual {

class WorkLimitError : public ResourceLimitError {
public:
    using ResourceLimitError::ResourceLimitError;
};

/// Unordered row couple, always first < second.
struct RowPair {
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    friend auto operator<=>(const RowPair&, const RowPair&) = default;
};

using TidList = std::vector<std::uint32_t>;

struct Transaction {
    RowPair pair;
    /// Items respected from row `first` to row `second`; tied attributes are absent.
    std::vector<GradualItem> items;
};

/// One transaction per unordered row pair; tid = index into `transactions`.
struct TransactionalDataset {
    std::size_t n = 0;
    std::vector<Transaction> transactions;
    std::map<GradualItem, TidList> items_to_tids;
};

struct TransactionGroup {
    TidList tids;
    std::size_t weight = 0;
    std::vector<GradualItem> items;
};

struct ReducedDataset {
    std::size_t n = 0;
    /// tid -> row pair, shared with the source transactional dataset.
    std::vector<RowPair> pairs;
    /// Identical itemsets merged, in order of first appearance.
    std::vector<TransactionGroup> groups;
    /// Only items whose tid list reaches the minimum length.
    std::map<GradualItem, TidList> items_to_tids;
};

TransactionalDataset encode_transactions(const NumericDataset& d);

ReducedDataset reduce_dataset(const TransactionalDataset& t, std::size_t min_len);

struct ParaminerConfig {
    double sigma = 0.5;
    /// Maximum number of closure computations before WorkLimitError.
    std::size_t max_closures = 50'000'000;
};

/// Depth-first closed-pattern miner over the transactional encoding, using
/// prefix-preserving closure extension. Each unordered pair is also read in
/// the reverse direction (its mirror carries the complemented items), so a
/// pattern's tid set covers exactly the ordered pairs its order matrix marks.
MiningResult mine_paraminer(const NumericDataset& d, const ParaminerConfig& cfg);

inline MiningResult mine_paraminer(const NumericDataset& d, double sigma) {
    return mine_paraminer(d, ParaminerConfig{sigma});
}

}  // namespace gradual
