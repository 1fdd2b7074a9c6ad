#include "lgsection/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

#include "lgsection/modular.hpp"

namespace lgs {

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % q == 0) return v == q;
    }
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for every n < 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod::pow(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mod::mul(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Characteristic Characteristic::prime(std::uint64_t p) {
    if (p >= (1ull << 63) || !is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) +
                                    " is not a prime below 2^63");
    return Characteristic(p);
}

Characteristic Characteristic::of(std::uint64_t value) {
    return value == 0 ? zero() : prime(value);
}

Characteristic Characteristic::parse(std::string_view text) {
    std::uint64_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last)
        throw std::invalid_argument("bad characteristic '" + std::string(text) + "'");
    return of(v);
}

// --- SparseIntMatrix -------------------------------------------------------

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.row >= rows_ || e.col >= cols_)
            throw std::invalid_argument("SparseIntMatrix: entry out of range");
        if (e.value == 0) throw std::invalid_argument("SparseIntMatrix: explicit zero entry");
    }
    std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                  [](const MatrixEntry& a, const MatrixEntry& b) {
                                      return a.row == b.row && a.col == b.col;
                                  });
    if (dup != entries_.end())
        throw std::invalid_argument("SparseIntMatrix: duplicate coordinate");
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw std::invalid_argument("SparseIntMatrix::from_dense: ragged rows");
        for (std::size_t c = 0; c < ncols; ++c)
            if (rows[r][c] != 0) entries.push_back({r, c, rows[r][c]});
    }
    return SparseIntMatrix(rows.size(), ncols, std::move(entries));
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t k) {
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < k; ++i) entries.push_back({i, i, 1});
    return SparseIntMatrix(k, k, std::move(entries));
}

std::int64_t SparseIntMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseIntMatrix::at");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(row, col),
                               [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::pair(e.row, e.col) < key;
                               });
    return (it != entries_.end() && it->row == row && it->col == col) ? it->value : 0;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_, 0));
    for (const auto& e : entries_) out[e.row][e.col] = e.value;
    return out;
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                          const std::vector<std::size_t>& col_perm) const {
    if (row_perm.size() != rows_ || col_perm.size() != cols_)
        throw std::invalid_argument("SparseIntMatrix::permuted: permutation size mismatch");
    std::vector<MatrixEntry> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back({row_perm[e.row], col_perm[e.col], e.value});
    return SparseIntMatrix(rows_, cols_, std::move(out));
}

// --- elimination kernels ---------------------------------------------------

namespace {

// Column positions ordered by ascending column count, ties by column index.
std::vector<std::uint32_t> sparsest_first_order(const SparseIntMatrix& m) {
    std::vector<std::size_t> count(m.cols(), 0);
    for (const auto& e : m.entries()) ++count[e.col];
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return count[a] < count[b]; });
    std::vector<std::uint32_t> pos(m.cols());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::uint32_t>(i);
    return pos;
}

template <typename Value>
using SparseRow = std::vector<std::pair<std::uint32_t, Value>>;

template <typename Value, typename Convert>
std::vector<SparseRow<Value>> split_rows(const SparseIntMatrix& m, Convert convert) {
    const auto pos = sparsest_first_order(m);
    std::vector<SparseRow<Value>> rows(m.rows());
    for (const auto& e : m.entries()) {
        Value v = convert(e.value);
        if (v != 0) rows[e.row].emplace_back(pos[e.col], std::move(v));
    }
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return rows;
}

std::size_t sparse_rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
    auto rows = split_rows<std::uint64_t>(m, [p](std::int64_t v) { return mod::reduce(v, p); });
    std::vector<std::int64_t> pivot_of(m.cols(), -1);
    std::vector<SparseRow<std::uint64_t>> pivots;
    SparseRow<std::uint64_t> scratch;

    for (auto& row : rows) {
        while (!row.empty()) {
            const auto lead = row.front().first;
            if (pivot_of[lead] < 0) {
                const std::uint64_t s = mod::inv(row.front().second, p);
                for (auto& [c, v] : row) v = mod::mul(v, s, p);
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            // row -= factor * pivot, where the pivot row has leading entry 1.
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            const std::uint64_t factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, mod::neg(mod::mul(factor, piv[j].second, p), p));
                    ++j;
                } else {
                    const std::uint64_t v =
                        mod::sub(row[i].second, mod::mul(factor, piv[j].second, p), p);
                    if (v != 0) scratch.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
        }
    }
    return pivots.size();
}

void make_primitive(SparseRow<mpz_class>& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Same pivot scheme as the modular kernel; each reduction is the
// cross-multiplication row <- a*row - b*pivot followed by content removal,
// so entries stay integral and small.
std::size_t sparse_rank_char0(const SparseIntMatrix& m) {
    auto rows = split_rows<mpz_class>(m, [](std::int64_t v) { return mpz_class(static_cast<long>(v)); });
    std::vector<std::int64_t> pivot_of(m.cols(), -1);
    std::vector<SparseRow<mpz_class>> pivots;
    SparseRow<mpz_class> scratch;
    mpz_class g, a, b, t;

    for (auto& row : rows) {
        make_primitive(row);
        while (!row.empty()) {
            const auto lead = row.front().first;
            if (pivot_of[lead] < 0) {
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), piv.front().second.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, -b * piv[j].second);
                    ++j;
                } else {
                    t = a * row[i].second - b * piv[j].second;
                    if (t != 0) scratch.emplace_back(row[i].first, t);
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
            make_primitive(row);
        }
    }
    return pivots.size();
}

std::size_t dense_rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc, 0));
    for (const auto& e : m.entries()) a[e.row][e.col] = mod::reduce(e.value, p);

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t s = mod::inv(a[r][c], p);
        for (std::size_t j = c; j < nc; ++j) a[r][j] = mod::mul(a[r][j], s, p);
        for (std::size_t i = r + 1; i < nr; ++i) {
            const std::uint64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < nc; ++j)
                if (a[r][j] != 0) a[i][j] = mod::sub(a[i][j], mod::mul(f, a[r][j], p), p);
        }
        ++r;
    }
    return r;
}

// Bareiss fraction-free elimination. After each step every surviving entry
// is a minor of the original matrix, so the division by the previous pivot
// is exact.
std::size_t dense_rank_bareiss(const SparseIntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc, 0));
    for (const auto& e : m.entries()) a[e.row][e.col] = static_cast<long>(e.value);

    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        const mpz_class& pv = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            auto& row = a[i];
            if (row[c] == 0) {
                if (pv == prev) continue;
                for (std::size_t j = c + 1; j < nc; ++j) {
                    if (row[j] == 0) continue;
                    t = pv * row[j];
                    mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = c + 1; j < nc; ++j) {
                if (a[r][j] == 0 && row[j] == 0) continue;
                t = pv * row[j] - row[c] * a[r][j];
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

void require_prime(std::uint64_t p) {
    if (p >= (1ull << 63) || !is_prime(p))
        throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not a supported prime");
}

} // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
    require_prime(p);
    return m.cols() <= kDenseColumnLimit ? dense_rank_mod_p(m, p) : sparse_rank_mod_p(m, p);
}

std::size_t rank_char0(const SparseIntMatrix& m) {
    return m.cols() <= kDenseColumnLimit ? dense_rank_bareiss(m) : sparse_rank_char0(m);
}

std::size_t rank(const SparseIntMatrix& m, Characteristic c) {
    return c.is_zero() ? rank_char0(m) : rank_mod_p(m, c.value());
}

std::size_t rank_dense(const SparseIntMatrix& m, Characteristic c) {
    return c.is_zero() ? dense_rank_bareiss(m) : dense_rank_mod_p(m, c.value());
}

std::size_t rank_sparse(const SparseIntMatrix& m, Characteristic c) {
    return c.is_zero() ? sparse_rank_char0(m) : sparse_rank_mod_p(m, c.value());
}

} // namespace lgs
