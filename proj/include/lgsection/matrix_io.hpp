#pragma once

#include <iosfwd>
#include <string_view>

#include "lgsection/linalg.hpp"

namespace lgs {

enum class MatrixFormat { MatrixMarket, Csv };

// "mtx" or "csv"; throws std::invalid_argument otherwise.
MatrixFormat parse_matrix_format(std::string_view text);

// Matrix Market "coordinate integer general", 1-based, entries in (row, col)
// order. Output is a pure function of the matrix.
void write_matrix_market(const SparseIntMatrix& m, std::ostream& os);
// Header "row,col,value" then one 1-based line per nonzero, same order.
void write_csv(const SparseIntMatrix& m, std::ostream& os);
void write_matrix(const SparseIntMatrix& m, MatrixFormat format, std::ostream& os);

// Readers throw std::runtime_error on malformed input. CSV carries no
// shape, so the caller supplies it.
SparseIntMatrix read_matrix_market(std::istream& is);
SparseIntMatrix read_csv(std::istream& is, std::size_t rows, std::size_t cols);

} // namespace lgs
