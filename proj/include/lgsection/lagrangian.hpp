#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgsection/combinatorics.hpp"
#include "lgsection/plucker.hpp"

namespace lgs {

using Vector = std::vector<std::uint64_t>;

/// n linearly independent vectors of GF(p)^{2n}, spanning W in G(n, 2n).
class SubspaceBasis {
public:
    // Reduces entries mod p. Throws std::invalid_argument if p is not
    // prime, shapes are wrong, or the rows are dependent.
    SubspaceBasis(int n, std::uint64_t p, std::vector<Vector> rows);

    // Span of the standard vectors e_i, i in `support` (1-based).
    static SubspaceBasis coordinate(int n, std::uint64_t p, const Index& support);

    int n() const noexcept { return n_; }
    std::uint64_t p() const noexcept { return p_; }
    const std::vector<Vector>& rows() const noexcept { return rows_; }

private:
    int n_;
    std::uint64_t p_;
    std::vector<Vector> rows_;
};

// Antisymmetric form: omega(e_i, e_j) = +1 if i + j = 2n + 1 and i < j,
// -1 if i > j, 0 otherwise.
std::uint64_t symplectic_form(const Vector& x, const Vector& y, int n, std::uint64_t p);

// Rank of a set of vectors over GF(p).
std::size_t row_rank(std::vector<Vector> rows, std::uint64_t p);

SubspaceBasis standard_lagrangian(int n, std::uint64_t p);

bool is_isotropic(const SubspaceBasis& w);

// Applies x -> x + lambda * omega(x, v) * v to every basis vector.
SubspaceBasis apply_transvection(const SubspaceBasis& w, const Vector& v, std::uint64_t lambda);

/// Standard Lagrangian moved by `steps` random transvections.
///
/// Draws come from std::mt19937_64 seeded with `seed`; a vector entry is
/// draw % p and lambda is 1 + draw % (p - 1), in that order per step.
SubspaceBasis random_lagrangian(int n, std::uint64_t p, std::uint64_t seed, int steps = 40);

/// Negative control: span{e_1, ..., e_{n-1}, e_{n+2}} moved by random
/// transvections. Never isotropic since (n-1) + (n+2) = 2n+1.
SubspaceBasis random_non_isotropic(int n, std::uint64_t p, std::uint64_t seed, int steps = 40);

/// Plücker coordinates: the n x n minors of the basis over GF(p).
Tensor plucker_coordinates(const SubspaceBasis& w);

struct MembershipResult {
    bool in_kernel = false;
    std::size_t violated_relations = 0;
    std::optional<Index> first_violation;
};

MembershipResult check_kernel_membership(const SubspaceBasis& w, FormConvention conv);

inline bool verify_kernel_membership(const SubspaceBasis& w, FormConvention conv) {
    return check_kernel_membership(w, conv).in_kernel;
}

} // namespace lgs
