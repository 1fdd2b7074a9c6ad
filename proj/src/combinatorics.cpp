#include "lgsection/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgs {

std::uint64_t binomial(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > m) return 0;
    k = std::min(k, m - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        // acc * (m - k + i) / i stays integral at every step.
        acc = acc * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

Index::Index(std::vector<int> elements, int universe)
    : elements_(std::move(elements)), universe_(universe) {
    if (universe_ < 0) throw std::invalid_argument("Index: negative universe");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const int v = elements_[i];
        if (v < 1 || v > universe_)
            throw std::invalid_argument("Index: element " + std::to_string(v) +
                                        " outside [1, " + std::to_string(universe_) + "]");
        if (i > 0 && elements_[i - 1] >= v)
            throw std::invalid_argument("Index: elements must be strictly increasing");
    }
}

Index::Index(std::initializer_list<int> elements, int universe)
    : Index(std::vector<int>(elements), universe) {}

bool Index::contains(int value) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

int Index::position(int value) const noexcept {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
    if (it == elements_.end() || *it != value) return 0;
    return static_cast<int>(it - elements_.begin()) + 1;
}

Index Index::with(std::span<const int> values) const {
    std::vector<int> out = elements_;
    for (int v : values) {
        if (contains(v)) throw std::invalid_argument("Index::with: value already present");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("Index::with: repeated value");
    return Index(std::move(out), universe_);
}

Index Index::without(std::span<const int> values) const {
    std::vector<int> out = elements_;
    for (int v : values) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it == out.end()) throw std::invalid_argument("Index::without: value not present");
        out.erase(it);
    }
    return Index(std::move(out), universe_);
}

std::string to_label(const Index& alpha) {
    std::string s;
    for (int v : alpha.elements()) {
        if (v < 10)
            s.push_back(static_cast<char>('0' + v));
        else if (v < 36)
            s.push_back(static_cast<char>('A' + v - 10));
        else
            s += "[" + std::to_string(v) + "]";
    }
    return s;
}

std::string to_string(const Index& alpha) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int v : alpha.elements()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ')';
    return os.str();
}

std::vector<Index> enumerate_indices(int ell, int m) {
    if (ell < 0 || m < 0 || ell > m)
        throw std::invalid_argument("enumerate_indices: need 0 <= ell <= m");
    std::vector<Index> out;
    out.reserve(binomial(m, ell));
    std::vector<int> cur(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, m);
        // Advance to the lexicographic successor.
        int i = ell - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - ell + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ell; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint64_t rank_index(const Index& alpha) {
    const int ell = alpha.size();
    const int m = alpha.universe();
    std::uint64_t r = 0;
    int prev = 0;
    for (int i = 0; i < ell; ++i) {
        // Count the tuples that agree so far but take a smaller value here.
        for (int v = prev + 1; v < alpha[i]; ++v) r += binomial(m - v, ell - i - 1);
        prev = alpha[i];
    }
    return r;
}

Index unrank_index(std::uint64_t r, int ell, int m) {
    if (ell < 0 || m < 0 || ell > m)
        throw std::invalid_argument("unrank_index: need 0 <= ell <= m");
    if (r >= binomial(m, ell))
        throw std::invalid_argument("unrank_index: rank " + std::to_string(r) +
                                    " out of range for C(" + std::to_string(m) + "," +
                                    std::to_string(ell) + ")");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(ell));
    int v = 1;
    for (int i = 0; i < ell; ++i) {
        while (true) {
            const std::uint64_t block = binomial(m - v, ell - i - 1);
            if (r < block) break;
            r -= block;
            ++v;
        }
        out.push_back(v);
        ++v;
    }
    return Index(std::move(out), m);
}

DualPairProfile dual_pair_profile(const Index& alpha, int n) {
    if (n < 1) throw std::invalid_argument("dual_pair_profile: n must be positive");
    const int dual_sum = 2 * n + 1;
    DualPairProfile prof;
    prof.n = n;
    for (int v : alpha.elements()) {
        if (v > 2 * n)
            throw std::invalid_argument("dual_pair_profile: element " + std::to_string(v) +
                                        " exceeds 2n = " + std::to_string(2 * n));
    }
    for (int v : alpha.elements()) {
        const int partner = dual_sum - v;
        if (alpha.contains(partner)) {
            if (v < partner) prof.pairs.emplace_back(v, partner);
        } else {
            prof.free.push_back(v);
        }
    }
    return prof;
}

PartitionClass partition_class(const Index& alpha, int n) {
    if (n < 2) throw std::invalid_argument("partition_class: n must be >= 2");
    if (alpha.size() != n - 2)
        throw std::invalid_argument("partition_class: index length " +
                                    std::to_string(alpha.size()) + " != n-2 = " +
                                    std::to_string(n - 2));
    auto prof = dual_pair_profile(alpha, n);
    return PartitionClass{static_cast<int>(prof.pairs.size()), std::move(prof.free)};
}

std::map<int, CensusEntry> partition_census(int n) {
    if (n < 2) throw std::invalid_argument("partition_census: n must be >= 2");
    std::map<int, std::set<std::vector<int>>> classes;
    std::map<int, CensusEntry> out;
    for (const auto& alpha : enumerate_indices(n - 2, 2 * n)) {
        auto cls = partition_class(alpha, n);
        ++out[cls.pair_count].indices;
        classes[cls.pair_count].insert(std::move(cls.free));
    }
    for (auto& [k, entry] : out) entry.classes = classes[k].size();
    return out;
}

} // namespace lgs
