#include "gradual/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace gradual {

char variation_symbol(Variation v) noexcept { return v == Variation::Up ? '+' : '-'; }

GradualPattern::GradualPattern(std::vector<GradualItem> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    for (std::size_t i = 1; i < items_.size(); ++i) {
        if (items_[i].attribute == items_[i - 1].attribute) {
            throw Error("gradual pattern repeats attribute " + std::to_string(items_[i].attribute));
        }
    }
}

GradualPattern::GradualPattern(std::initializer_list<GradualItem> items)
    : GradualPattern(std::vector<GradualItem>(items)) {}

bool GradualPattern::contains(GradualItem item) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool GradualPattern::has_attribute(std::uint32_t attribute) const noexcept {
    return std::any_of(items_.begin(), items_.end(),
                       [&](const GradualItem& it) { return it.attribute == attribute; });
}

bool GradualPattern::is_subset_of(const GradualPattern& other) const noexcept {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

GradualPattern GradualPattern::with(GradualItem item) const {
    auto items = items_;
    items.push_back(item);
    return GradualPattern(std::move(items));
}

GradualPattern GradualPattern::without(std::size_t position) const {
    auto items = items_;
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(position));
    GradualPattern out;
    out.items_ = std::move(items);
    return out;
}

std::string GradualPattern::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(items_[i].attribute);
        out += variation_symbol(items_[i].variation);
    }
    return out + "}";
}

std::string GradualPattern::to_string(std::span<const std::string> names) const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ", ";
        const auto a = items_[i].attribute;
        out += a < names.size() ? names[a] : std::to_string(a);
        out += variation_symbol(items_[i].variation);
    }
    return out + "}";
}

GradualPattern complement(const GradualPattern& p) {
    std::vector<GradualItem> items(p.items().begin(), p.items().end());
    for (auto& it : items) it.variation = flip(it.variation);
    return GradualPattern(std::move(items));
}

bool is_canonical(const GradualPattern& p) noexcept {
    return p.empty() || p[0].variation == Variation::Up;
}

GradualPattern canonicalize(const GradualPattern& p) {
    return is_canonical(p) ? p : complement(p);
}

NumericDataset::NumericDataset(std::vector<std::string> attribute_names,
                               std::vector<std::vector<double>> rows)
    : names_(std::move(attribute_names)), rows_(rows.size()) {
    if (rows_ == 0) throw DatasetError("no data rows");
    if (rows_ < 2) throw DatasetError("n >= 2 required (got 1 row)");
    if (names_.size() < 2) throw DatasetError("m >= 2 required (got " + std::to_string(names_.size()) + " attribute)");
    values_.reserve(rows_ * names_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != names_.size()) {
            throw DatasetError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                               " values, expected " + std::to_string(names_.size()));
        }
        for (double v : rows[r]) {
            if (!std::isfinite(v)) throw DatasetError("non-finite value in row " + std::to_string(r));
            values_.push_back(v);
        }
    }
}

std::uint32_t NumericDataset::attribute_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DatasetError("unknown attribute '" + name + "'");
    return static_cast<std::uint32_t>(it - names_.begin());
}

double support_ratio(std::size_t concordant, std::size_t n) {
    return static_cast<double>(concordant) / static_cast<double>(pair_count(n));
}

std::size_t min_concordant_count(double sigma, std::size_t n) {
    const std::size_t pairs = pair_count(n);
    const double start = std::clamp(std::floor(sigma * static_cast<double>(pairs)), 0.0, static_cast<double>(pairs));
    auto c = static_cast<std::size_t>(start);
    while (c > 0 && support_ratio(c - 1, n) >= sigma) --c;
    while (c <= pairs && support_ratio(c, n) < sigma) ++c;
    return c;
}

OrderMatrix::OrderMatrix(std::size_t n, bool fill)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (fill) {
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) set(r, c, r != c);
        }
    }
}

OrderMatrix OrderMatrix::ones(std::size_t n) { return OrderMatrix(n, true); }

void OrderMatrix::set(std::size_t row, std::size_t col, bool value) noexcept {
    auto& word = bits_[row * words_ + col / 64];
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    word = value ? (word | mask) : (word & ~mask);
}

std::size_t OrderMatrix::count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

OrderMatrix& OrderMatrix::operator&=(const OrderMatrix& other) {
    if (other.n_ != n_) {
        throw Error("order matrix dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
}

OrderMatrix build_order_matrix(const NumericDataset& d, GradualItem item) {
    if (item.attribute >= d.cols()) {
        throw Error("attribute index " + std::to_string(item.attribute) + " out of range [0, " +
                    std::to_string(d.cols()) + ")");
    }
    const std::size_t n = d.rows();
    OrderMatrix m(n);
    for (std::size_t x = 0; x < n; ++x) {
        const double vx = d.value(x, item.attribute);
        for (std::size_t y = 0; y < n; ++y) {
            const double vy = d.value(y, item.attribute);
            if (item.variation == Variation::Up ? vx < vy : vx > vy) m.set(x, y);
        }
    }
    return m;
}

OrderMatrix and_matrices(const OrderMatrix& a, const OrderMatrix& b) {
    OrderMatrix out = a;
    out &= b;
    return out;
}

double support_of(const OrderMatrix& mat, std::size_t n) {
    if (n < 2) throw Error("support requires n >= 2");
    return support_ratio(mat.count(), n);
}

OrderMatrix pattern_matrix(const NumericDataset& d, const GradualPattern& p) {
    if (p.empty()) throw Error("pattern_matrix requires a non-empty pattern");
    OrderMatrix m = build_order_matrix(d, p[0]);
    for (std::size_t i = 1; i < p.size(); ++i) m &= build_order_matrix(d, p[i]);
    return m;
}

double pattern_support(const NumericDataset& d, const GradualPattern& p) {
    return support_of(pattern_matrix(d, p), d.rows());
}

}  // namespace gradual
