#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgs {

// Binomial coefficient C(m, k); zero when k > m. Throws std::overflow_error
// if the value does not fit in 64 bits.
std::uint64_t binomial(int m, int k);

/// A strictly increasing tuple of integers in [1, m].
///
/// Indices label both basis tensors e_alpha and Plücker coordinates. They
/// are stored 1-based. Equality and ordering look at the elements only, so
/// ordering is lexicographic on the element tuple.
class Index {
public:
    Index() = default;
    Index(std::vector<int> elements, int universe);
    Index(std::initializer_list<int> elements, int universe);

    std::span<const int> elements() const noexcept { return elements_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    int universe() const noexcept { return universe_; }
    bool empty() const noexcept { return elements_.empty(); }
    int operator[](int pos) const { return elements_[static_cast<std::size_t>(pos)]; }

    bool contains(int value) const noexcept;
    // 1-based position of value, or 0 when absent.
    int position(int value) const noexcept;

    // New index with the given values inserted / removed (the result is
    // re-sorted). Throws std::invalid_argument on collisions or misses.
    Index with(std::span<const int> values) const;
    Index without(std::span<const int> values) const;

    friend bool operator==(const Index& a, const Index& b) noexcept {
        return a.elements_ == b.elements_;
    }
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) noexcept {
        return a.elements_ <=> b.elements_;
    }

private:
    std::vector<int> elements_;
    int universe_ = 0;
};

// Compact label: 1..9 then A=10, B=11, ...
// e.g. (1,2,3,4,5,12) -> "12345C". Only used for display.
std::string to_label(const Index& alpha);
// "(1,2,3,4)" style tuple text.
std::string to_string(const Index& alpha);

/// All C(m, ell) indices of I(ell, m) in lexicographic order.
std::vector<Index> enumerate_indices(int ell, int m);

/// Position of alpha in the lexicographic enumeration of I(|alpha|, m).
std::uint64_t rank_index(const Index& alpha);
Index unrank_index(std::uint64_t r, int ell, int m);

/// Dual pairs {i, 2n+1-i} fully contained in an index, plus the leftovers.
struct DualPairProfile {
    int n = 0;
    std::vector<std::pair<int, int>> pairs; // (a, b) with a < b, sorted by a
    std::vector<int> free;                  // ascending
};

DualPairProfile dual_pair_profile(const Index& alpha, int n);

// Class key of the dual-pair partition of I(n-2, 2n): the number of
// contained dual pairs and the free part.
struct PartitionClass {
    int pair_count = 0;
    std::vector<int> free;

    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
    friend auto operator<=>(const PartitionClass&, const PartitionClass&) = default;
};

PartitionClass partition_class(const Index& alpha, int n);

struct CensusEntry {
    std::uint64_t classes = 0;
    std::uint64_t indices = 0;

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

// Keyed by pair count; totals over all keys equal C(2n, n-2).
std::map<int, CensusEntry> partition_census(int n);

} // namespace lgs
