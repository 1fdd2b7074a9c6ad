#include "lgsection/lagrangian.hpp"

#include <random>
#include <stdexcept>

#include "lgsection/linalg.hpp"
#include "lgsection/modular.hpp"

namespace lgs {

SubspaceBasis::SubspaceBasis(int n, std::uint64_t p, std::vector<Vector> rows)
    : n_(n), p_(p), rows_(std::move(rows)) {
    if (n < 1) throw std::invalid_argument("SubspaceBasis: n must be positive");
    Characteristic::prime(p);
    if (rows_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("SubspaceBasis: expected n basis vectors");
    for (auto& r : rows_) {
        if (r.size() != static_cast<std::size_t>(2 * n))
            throw std::invalid_argument("SubspaceBasis: vectors must have length 2n");
        for (auto& x : r) x %= p;
    }
    if (row_rank(rows_, p) != static_cast<std::size_t>(n))
        throw std::invalid_argument("SubspaceBasis: rows are linearly dependent");
}

SubspaceBasis SubspaceBasis::coordinate(int n, std::uint64_t p, const Index& support) {
    if (support.size() != n) throw std::invalid_argument("SubspaceBasis::coordinate: need n indices");
    std::vector<Vector> rows;
    for (int i : support.elements()) {
        if (i > 2 * n) throw std::invalid_argument("SubspaceBasis::coordinate: index exceeds 2n");
        Vector v(static_cast<std::size_t>(2 * n), 0);
        v[static_cast<std::size_t>(i - 1)] = 1;
        rows.push_back(std::move(v));
    }
    return SubspaceBasis(n, p, std::move(rows));
}

std::uint64_t symplectic_form(const Vector& x, const Vector& y, int n, std::uint64_t p) {
    // omega(x, y) = sum_{i <= n} x_i y_{2n+1-i} - x_{2n+1-i} y_i  (1-based).
    std::uint64_t acc = 0;
    for (int i = 1; i <= n; ++i) {
        const auto a = static_cast<std::size_t>(i - 1);
        const auto b = static_cast<std::size_t>(2 * n - i);
        acc = mod::add(acc, mod::mul(x[a], y[b], p), p);
        acc = mod::sub(acc, mod::mul(x[b], y[a], p), p);
    }
    return acc;
}

std::size_t row_rank(std::vector<Vector> rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t nc = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const std::uint64_t s = mod::inv(rows[r][c] % p, p);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const std::uint64_t f = mod::mul(rows[i][c] % p, s, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < nc; ++j)
                rows[i][j] = mod::sub(rows[i][j] % p, mod::mul(f, rows[r][j] % p, p), p);
        }
        ++r;
    }
    return r;
}

SubspaceBasis standard_lagrangian(int n, std::uint64_t p) {
    std::vector<int> first(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) first[static_cast<std::size_t>(i)] = i + 1;
    return SubspaceBasis::coordinate(n, p, Index(std::move(first), 2 * n));
}

bool is_isotropic(const SubspaceBasis& w) {
    const auto& rows = w.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (symplectic_form(rows[i], rows[j], w.n(), w.p()) != 0) return false;
    return true;
}

SubspaceBasis apply_transvection(const SubspaceBasis& w, const Vector& v, std::uint64_t lambda) {
    const std::uint64_t p = w.p();
    std::vector<Vector> out = w.rows();
    for (auto& x : out) {
        const std::uint64_t k = mod::mul(lambda % p, symplectic_form(x, v, w.n(), p), p);
        if (k == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod::add(x[i], mod::mul(k, v[i] % p, p), p);
    }
    return SubspaceBasis(w.n(), p, std::move(out));
}

namespace {

SubspaceBasis transvect_randomly(SubspaceBasis w, std::uint64_t seed, int steps) {
    if (steps < 0) throw std::invalid_argument("random transvections: steps must be >= 0");
    std::mt19937_64 rng(seed);
    const std::uint64_t p = w.p();
    for (int s = 0; s < steps; ++s) {
        Vector v(static_cast<std::size_t>(2 * w.n()));
        for (auto& x : v) x = rng() % p;
        const std::uint64_t lambda = 1 + rng() % (p - 1);
        w = apply_transvection(w, v, lambda);
    }
    return w;
}

} // namespace

SubspaceBasis random_lagrangian(int n, std::uint64_t p, std::uint64_t seed, int steps) {
    return transvect_randomly(standard_lagrangian(n, p), seed, steps);
}

SubspaceBasis random_non_isotropic(int n, std::uint64_t p, std::uint64_t seed, int steps) {
    if (n < 2) throw std::invalid_argument("random_non_isotropic: n must be >= 2");
    std::vector<int> support;
    for (int i = 1; i < n; ++i) support.push_back(i);
    support.push_back(n + 2);
    return transvect_randomly(SubspaceBasis::coordinate(n, p, Index(std::move(support), 2 * n)), seed,
                              steps);
}

namespace {

std::uint64_t determinant_mod_p(std::vector<Vector> a, std::uint64_t p) {
    const std::size_t k = a.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = mod::neg(det, p);
        }
        det = mod::mul(det, a[c][c], p);
        const std::uint64_t s = mod::inv(a[c][c], p);
        for (std::size_t i = c + 1; i < k; ++i) {
            const std::uint64_t f = mod::mul(a[i][c], s, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < k; ++j) a[i][j] = mod::sub(a[i][j], mod::mul(f, a[c][j], p), p);
        }
    }
    return det;
}

} // namespace

Tensor plucker_coordinates(const SubspaceBasis& w) {
    const int n = w.n();
    const std::uint64_t p = w.p();
    Tensor out(n, n, Characteristic::prime(p));
    std::vector<Vector> minor(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (const auto& alpha : enumerate_indices(n, 2 * n)) {
        for (std::size_t r = 0; r < minor.size(); ++r)
            for (int c = 0; c < n; ++c)
                minor[r][static_cast<std::size_t>(c)] = w.rows()[r][static_cast<std::size_t>(alpha[c] - 1)];
        const std::uint64_t d = determinant_mod_p(minor, p);
        if (d != 0) out.add(alpha, mpz_class(static_cast<unsigned long>(d)));
    }
    return out;
}

MembershipResult check_kernel_membership(const SubspaceBasis& w, FormConvention conv) {
    const Tensor image = contract_tensor(plucker_coordinates(w), conv);
    MembershipResult out;
    out.in_kernel = image.is_zero();
    out.violated_relations = image.coords().size();
    if (!image.is_zero()) out.first_violation = image.coords().begin()->first;
    return out;
}

} // namespace lgs
