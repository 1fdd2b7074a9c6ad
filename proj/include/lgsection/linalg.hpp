#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lgs {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t v) noexcept;

/// Characteristic of the base field: 0 (the rationals) or a prime p.
class Characteristic {
public:
    static Characteristic zero() noexcept { return Characteristic(); }
    // Throws std::invalid_argument unless p is a prime below 2^63.
    static Characteristic prime(std::uint64_t p);
    // Accepts 0 or a prime; throws std::invalid_argument otherwise.
    static Characteristic of(std::uint64_t value);
    // Decimal text, e.g. "0" or "3".
    static Characteristic parse(std::string_view text);

    std::uint64_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(Characteristic, Characteristic) = default;
    friend auto operator<=>(Characteristic, Characteristic) = default;

private:
    Characteristic() = default;
    explicit Characteristic(std::uint64_t v) : value_(v) {}
    std::uint64_t value_ = 0;
};

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Coordinate-list integer matrix.
///
/// Entries are kept sorted by (row, col); zero values and duplicate
/// coordinates are rejected at construction.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
    static SparseIntMatrix identity(std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }

    std::int64_t at(std::size_t row, std::size_t col) const;
    std::vector<std::vector<std::int64_t>> to_dense() const;

    // Matrix obtained by sending row r to row_perm[r] and column c to col_perm[c].
    SparseIntMatrix permuted(const std::vector<std::size_t>& row_perm,
                             const std::vector<std::size_t>& col_perm) const;

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

// Matrices with at most this many columns are ranked with dense elimination.
inline constexpr std::size_t kDenseColumnLimit = 64;

/// Rank over GF(p). Throws std::invalid_argument if p is not prime.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

/// Rank over the rationals by fraction-free integer elimination.
std::size_t rank_char0(const SparseIntMatrix& m);

std::size_t rank(const SparseIntMatrix& m, Characteristic c);

// Whole-matrix dense elimination regardless of shape: Gauss-Jordan over
// GF(p), Bareiss over the integers. Used to cross-check the sparse paths.
std::size_t rank_dense(const SparseIntMatrix& m, Characteristic c);

// Sparse elimination regardless of shape.
std::size_t rank_sparse(const SparseIntMatrix& m, Characteristic c);

} // namespace lgs
