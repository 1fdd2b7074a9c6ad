#include "lgsection/blocks.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace lgs {

std::string Shape::label() const { return std::to_string(rows) + "x" + std::to_string(cols); }

std::map<Shape, std::size_t> BlockDecomposition::shape_counts() const {
    std::map<Shape, std::size_t> out;
    for (const auto& c : components) ++out[c.shape()];
    return out;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Keeps the smaller representative so roots are deterministic.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

BlockDecomposition decompose(const SparseIntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    // Vertices 0..nr-1 are rows, nr..nr+nc-1 columns.
    DisjointSets sets(nr + nc);
    std::vector<bool> row_used(nr, false), col_used(nc, false);
    for (const auto& e : m.entries()) {
        sets.unite(e.row, nr + e.col);
        row_used[e.row] = true;
        col_used[e.col] = true;
    }

    BlockDecomposition out;
    std::vector<std::size_t> slot(nr + nc, SIZE_MAX);
    for (std::size_t r = 0; r < nr; ++r) {
        if (!row_used[r]) {
            out.empty_rows.push_back(r);
            continue;
        }
        const std::size_t root = sets.find(r);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.components.size();
            out.components.emplace_back();
        }
        out.components[slot[root]].rows.push_back(r);
    }
    for (std::size_t c = 0; c < nc; ++c) {
        if (!col_used[c]) {
            out.isolated_columns.push_back(c);
            continue;
        }
        out.components[slot[sets.find(nr + c)]].cols.push_back(c);
    }

    // Local coordinates inside each component.
    std::vector<std::size_t> local_row(nr), local_col(nc), owner(nr);
    for (std::size_t k = 0; k < out.components.size(); ++k) {
        const auto& comp = out.components[k];
        for (std::size_t i = 0; i < comp.rows.size(); ++i) {
            local_row[comp.rows[i]] = i;
            owner[comp.rows[i]] = k;
        }
        for (std::size_t j = 0; j < comp.cols.size(); ++j) local_col[comp.cols[j]] = j;
    }
    std::vector<std::vector<MatrixEntry>> entries(out.components.size());
    for (const auto& e : m.entries())
        entries[owner[e.row]].push_back({local_row[e.row], local_col[e.col], e.value});
    for (std::size_t k = 0; k < out.components.size(); ++k) {
        auto& comp = out.components[k];
        comp.block = SparseIntMatrix(comp.rows.size(), comp.cols.size(), std::move(entries[k]));
    }
    return out;
}

BlockwiseRank blockwise_rank(const BlockDecomposition& d, Characteristic c) {
    BlockwiseRank out;
    out.characteristic = c;
    for (const auto& comp : d.components) {
        const std::size_t r = rank(comp.block, c);
        out.total += r;
        out.by_shape[comp.shape()].push_back(r);
    }
    return out;
}

BlockwiseRank blockwise_rank(const SparseIntMatrix& m, Characteristic c) {
    return blockwise_rank(decompose(m), c);
}

// --- permutation equivalence -----------------------------------------------

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

std::vector<std::int64_t> sorted_copy(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Dense transpose(const Dense& a, std::size_t cols) {
    Dense t(cols, std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

// Multiset of sorted rows, used as a cheap necessary condition.
std::vector<std::vector<std::int64_t>> row_signatures(const Dense& a) {
    std::vector<std::vector<std::int64_t>> sig;
    for (const auto& r : a) sig.push_back(sorted_copy(r));
    std::sort(sig.begin(), sig.end());
    return sig;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(Dense a, Dense b, std::size_t cols)
        : a_(std::move(a)), b_(std::move(b)), cols_(cols), used_(b_.size(), false),
          prefix_a_(cols), prefix_b_(cols) {}

    bool run() { return extend(0); }

private:
    // Column profiles restricted to the rows assigned so far must agree as
    // multisets; at full depth this is exactly column-permutation equivalence.
    bool profiles_agree() const {
        auto pa = prefix_a_;
        auto pb = prefix_b_;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        return pa == pb;
    }

    bool extend(std::size_t depth) {
        if (depth == a_.size()) return true;
        const auto want = sorted_copy(a_[depth]);
        for (std::size_t k = 0; k < b_.size(); ++k) {
            if (used_[k] || sorted_copy(b_[k]) != want) continue;
            used_[k] = true;
            for (std::size_t j = 0; j < cols_; ++j) {
                prefix_a_[j].push_back(a_[depth][j]);
                prefix_b_[j].push_back(b_[k][j]);
            }
            if (profiles_agree() && extend(depth + 1)) return true;
            for (std::size_t j = 0; j < cols_; ++j) {
                prefix_a_[j].pop_back();
                prefix_b_[j].pop_back();
            }
            used_[k] = false;
        }
        return false;
    }

    Dense a_, b_;
    std::size_t cols_;
    std::vector<bool> used_;
    std::vector<std::vector<std::int64_t>> prefix_a_, prefix_b_;
};

} // namespace

bool match_template(const SparseIntMatrix& component, const SparseIntMatrix& pattern) {
    if (component.rows() != pattern.rows() || component.cols() != pattern.cols())
        throw std::invalid_argument("match_template: shapes differ");
    if (component.nonzeros() != pattern.nonzeros()) return false;
    const Dense a = component.to_dense();
    const Dense b = pattern.to_dense();
    if (row_signatures(a) != row_signatures(b)) return false;
    if (row_signatures(transpose(a, component.cols())) != row_signatures(transpose(b, pattern.cols())))
        return false;
    return EquivalenceSearch(a, b, component.cols()).run();
}

// --- displayed patterns ----------------------------------------------------

namespace {

SparseIntMatrix from_bit_rows(std::initializer_list<std::string_view> rows) {
    Dense d;
    for (auto r : rows) {
        std::vector<std::int64_t> row;
        for (char ch : r) row.push_back(ch == '1' ? 1 : 0);
        d.push_back(std::move(row));
    }
    return SparseIntMatrix::from_dense(d);
}

} // namespace

namespace templates {

SparseIntMatrix pair_triple_block() {
    return from_bit_rows({
        "11110000000000000000",
        "10001110000000000000",
        "01001001100000000000",
        "00100101010000000000",
        "00010010110000000000",
        "10000000001110000000",
        "01000000001001100000",
        "00100000000101010000",
        "00010000000010110000",
        "00001000001000001100",
        "00000100000100001010",
        "00000010000010000110",
        "00000001000001001001",
        "00000000100000100101",
        "00000000010000010011",
    });
}

SparseIntMatrix single_pair_block() {
    return from_bit_rows({
        "111000",
        "100110",
        "010101",
        "001011",
    });
}

SparseIntMatrix two_term_block() { return from_bit_rows({"11"}); }

} // namespace templates

} // namespace lgs
