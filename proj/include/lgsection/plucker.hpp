#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lgsection/combinatorics.hpp"
#include "lgsection/linalg.hpp"

namespace lgs {

/// Coefficient convention for the symplectic form and the contraction.
///
/// Plain: <e_i, e_j> = 1 when i + j = 2n + 1 and every contraction term has
/// coefficient 1. Signed: the form is antisymmetric and a contraction of the
/// factors in positions s < t carries the sign (-1)^(s+t-1).
enum class FormConvention { Plain, Signed };

std::string_view to_string(FormConvention conv) noexcept;
// "plain" or "signed"; throws std::invalid_argument otherwise.
FormConvention parse_convention(std::string_view text);

int form_eval(int i, int j, int n, FormConvention conv);

struct ContractionTerm {
    Index index;
    int coefficient = 0;

    friend bool operator==(const ContractionTerm&, const ContractionTerm&) = default;
};

// f(e_alpha) for alpha in I(n, 2n), one term per dual pair inside alpha.
// The half-dimension is alpha.size(); alpha.universe() must equal 2n.
std::vector<ContractionTerm> contract_basis(const Index& alpha, FormConvention conv);

/// Element of the degree-th exterior power of a 2n-dimensional space.
///
/// Coordinates live in Z (characteristic 0) or are kept reduced into
/// [0, p). Absent keys are zero and zero coefficients are never stored.
class Tensor {
public:
    Tensor(int degree, int n, Characteristic ch);

    int degree() const noexcept { return degree_; }
    int n() const noexcept { return n_; }
    Characteristic characteristic() const noexcept { return ch_; }
    const std::map<Index, mpz_class>& coords() const noexcept { return coords_; }

    mpz_class coefficient(const Index& alpha) const;
    void add(const Index& alpha, const mpz_class& value);
    bool is_zero() const noexcept { return coords_.empty(); }

    Tensor scaled(const mpz_class& s) const;
    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);

    static Tensor basis(const Index& alpha, int n, Characteristic ch);

private:
    mpz_class normalize(const mpz_class& v) const;

    int degree_;
    int n_;
    Characteristic ch_;
    std::map<Index, mpz_class> coords_;
};

/// Linear extension of contract_basis: degree n -> degree n-2.
Tensor contract_tensor(const Tensor& w, FormConvention conv);

/// The linear relation attached to a pivot of I(n-2, 2n): one term for
/// each dual pair {i, 2n+1-i} disjoint from the pivot.
struct PluckerRelation {
    Index pivot;
    std::vector<ContractionTerm> terms; // ascending by index
};

PluckerRelation build_relation(const Index& pivot, int n, FormConvention conv);

inline constexpr int kDefaultMaxN = 8;

/// The C(2n, n-2) x C(2n, n) relation matrix. Row r is the relation of the
/// r-th pivot in lexicographic order, column c the c-th index of I(n, 2n).
SparseIntMatrix build_matrix(int n, FormConvention conv, int max_n = kDefaultMaxN);

} // namespace lgs
