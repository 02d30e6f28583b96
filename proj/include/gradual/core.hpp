#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradual {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DatasetError : public Error {
public:
    using Error::Error;
};

// Raised when a miner exceeds a configured candidate or work budget. The bench
// runner records these per cell instead of aborting the experiment matrix.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

enum class Variation : std::uint8_t { Up = 0, Down = 1 };

constexpr Variation flip(Variation v) noexcept {
    return v == Variation::Up ? Variation::Down : Variation::Up;
}

char variation_symbol(Variation v) noexcept;

struct GradualItem {
    std::uint32_t attribute = 0;
    Variation variation = Variation::Up;

    friend auto operator<=>(const GradualItem&, const GradualItem&) = default;
};

/// Dense item index: attribute * 2 + (Down ? 1 : 0).
constexpr std::size_t item_index(GradualItem item) noexcept {
    return static_cast<std::size_t>(item.attribute) * 2 + static_cast<std::size_t>(item.variation);
}

constexpr GradualItem item_from_index(std::size_t index) noexcept {
    return {static_cast<std::uint32_t>(index / 2), index % 2 == 0 ? Variation::Up : Variation::Down};
}

/// A set of gradual items over distinct attributes, kept sorted by attribute.
/// An empty pattern is representable (a decoded individual may select nothing)
/// but miners never emit patterns with fewer than two items.
class GradualPattern {
public:
    GradualPattern() = default;
    explicit GradualPattern(std::vector<GradualItem> items);
    GradualPattern(std::initializer_list<GradualItem> items);

    std::span<const GradualItem> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const GradualItem& operator[](std::size_t i) const { return items_[i]; }

    bool contains(GradualItem item) const noexcept;
    bool has_attribute(std::uint32_t attribute) const noexcept;
    bool is_subset_of(const GradualPattern& other) const noexcept;

    /// Returns a copy with `item` added; throws if the attribute is already present.
    GradualPattern with(GradualItem item) const;
    GradualPattern without(std::size_t position) const;

    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

    friend auto operator<=>(const GradualPattern&, const GradualPattern&) = default;
    friend bool operator==(const GradualPattern&, const GradualPattern&) = default;

private:
    std::vector<GradualItem> items_;
};

/// Flips every variation.
GradualPattern complement(const GradualPattern& p);

/// Representative of {p, complement(p)}: the one whose first item is Up.
GradualPattern canonicalize(const GradualPattern& p);

bool is_canonical(const GradualPattern& p) noexcept;

struct SupportedPattern {
    GradualPattern pattern;
    double support = 0.0;

    friend bool operator==(const SupportedPattern&, const SupportedPattern&) = default;
};

class NumericDataset {
public:
    NumericDataset(std::vector<std::string> attribute_names, std::vector<std::vector<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return names_.size(); }
    double value(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
    std::span<const std::string> attribute_names() const noexcept { return names_; }

    /// Index of the named attribute; throws DatasetError when absent.
    std::uint32_t attribute_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<double> values_;
    std::size_t rows_ = 0;
};

NumericDataset load_csv(const std::string& path, bool has_id_column);
NumericDataset parse_csv(std::istream& in, bool has_id_column);

/// Number of unordered row couples, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Support as the ratio of concordant ordered pairs to unordered couples.
double support_ratio(std::size_t concordant, std::size_t n);

/// Smallest count c such that support_ratio(c, n) >= sigma. Every miner derives
/// its integer threshold from here so that all of them agree at the boundary.
std::size_t min_concordant_count(double sigma, std::size_t n);

/// n x n bit grid stored as packed 64-bit rows.
class OrderMatrix {
public:
    OrderMatrix() = default;
    explicit OrderMatrix(std::size_t n, bool fill = false);

    static OrderMatrix ones(std::size_t n);
    static OrderMatrix zeros(std::size_t n) { return OrderMatrix(n, false); }

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t row, std::size_t col) const noexcept {
        return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U;
    }
    void set(std::size_t row, std::size_t col, bool value = true) noexcept;

    std::size_t count() const noexcept;
    OrderMatrix& operator&=(const OrderMatrix& other);
    std::size_t byte_size() const noexcept { return bits_.size() * sizeof(std::uint64_t); }

    friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Entry (x, x') is set iff the item's variation holds from row x to row x'.
/// Ties set neither direction.
OrderMatrix build_order_matrix(const NumericDataset& d, GradualItem item);

OrderMatrix and_matrices(const OrderMatrix& a, const OrderMatrix& b);

double support_of(const OrderMatrix& mat, std::size_t n);

/// AND of the pattern's item matrices. Requires a non-empty pattern.
OrderMatrix pattern_matrix(const NumericDataset& d, const GradualPattern& p);

double pattern_support(const NumericDataset& d, const GradualPattern& p);

}  // namespace gradual
