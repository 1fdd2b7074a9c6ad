#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lgsection/linalg.hpp"

namespace lgs {

struct Shape {
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::string label() const; // "15x20"
    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// One connected component of the row/column incidence graph of a matrix.
struct Component {
    std::vector<std::size_t> rows; // ascending, global row numbers
    std::vector<std::size_t> cols; // ascending, global column numbers
    SparseIntMatrix block;         // rows x cols submatrix in that order

    Shape shape() const noexcept { return {rows.size(), cols.size()}; }
};

struct BlockDecomposition {
    std::vector<Component> components; // ordered by smallest row
    std::vector<std::size_t> isolated_columns;
    std::vector<std::size_t> empty_rows;

    std::map<Shape, std::size_t> shape_counts() const;
};

/// Splits a matrix into the connected components of its bipartite
/// row/column graph (edges at nonzero entries).
BlockDecomposition decompose(const SparseIntMatrix& m);

struct BlockwiseRank {
    Characteristic characteristic = Characteristic::zero();
    std::size_t total = 0;
    // Per-component ranks grouped by shape, in component order.
    std::map<Shape, std::vector<std::size_t>> by_shape;
};

BlockwiseRank blockwise_rank(const BlockDecomposition& d, Characteristic c);
BlockwiseRank blockwise_rank(const SparseIntMatrix& m, Characteristic c);

/// True iff some row and column permutation carries `component` onto
/// `pattern`. Throws std::invalid_argument when the shapes differ.
bool match_template(const SparseIntMatrix& component, const SparseIntMatrix& pattern);

// The three block patterns of the n = 6 relation matrix, as printed.
namespace templates {
SparseIntMatrix pair_triple_block(); // 15 x 20
SparseIntMatrix single_pair_block(); // 4 x 6
SparseIntMatrix two_term_block();    // 1 x 2
} // namespace templates

} // namespace lgs
