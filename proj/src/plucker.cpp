#include "lgsection/plucker.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgs {

std::string_view to_string(FormConvention conv) noexcept {
    return conv == FormConvention::Plain ? "plain" : "signed";
}

FormConvention parse_convention(std::string_view text) {
    if (text == "plain") return FormConvention::Plain;
    if (text == "signed") return FormConvention::Signed;
    throw std::invalid_argument("unknown convention '" + std::string(text) +
                                "' (expected plain or signed)");
}

int form_eval(int i, int j, int n, FormConvention conv) {
    if (n < 1 || i < 1 || j < 1 || i > 2 * n || j > 2 * n)
        throw std::invalid_argument("form_eval: arguments outside [1, 2n]");
    if (i + j != 2 * n + 1) return 0;
    if (conv == FormConvention::Plain) return 1;
    return i < j ? 1 : -1;
}

namespace {

// Sign attached to removing the factors at 1-based positions s < t.
int koszul_sign(int s, int t) noexcept { return ((s + t - 1) % 2 == 0) ? 1 : -1; }

void require_symplectic_universe(const Index& alpha, int n, const char* who) {
    if (alpha.universe() != 2 * n)
        throw std::invalid_argument(std::string(who) + ": index universe " +
                                    std::to_string(alpha.universe()) + " != 2n = " +
                                    std::to_string(2 * n));
}

} // namespace

std::vector<ContractionTerm> contract_basis(const Index& alpha, FormConvention conv) {
    const int n = alpha.size();
    require_symplectic_universe(alpha, n, "contract_basis");
    std::vector<ContractionTerm> out;
    for (int s = 1; s <= n; ++s) {
        const int a = alpha[s - 1];
        const int b = 2 * n + 1 - a;
        if (b <= a) continue;
        const int t = alpha.position(b);
        if (t == 0) continue;
        int coeff = form_eval(a, b, n, conv);
        if (conv == FormConvention::Signed) coeff *= koszul_sign(s, t);
        const int removed[] = {a, b};
        out.push_back({alpha.without(removed), coeff});
    }
    return out;
}

// --- Tensor ----------------------------------------------------------------

Tensor::Tensor(int degree, int n, Characteristic ch) : degree_(degree), n_(n), ch_(ch) {
    if (n < 1 || degree < 0 || degree > 2 * n)
        throw std::invalid_argument("Tensor: need n >= 1 and 0 <= degree <= 2n");
}

mpz_class Tensor::normalize(const mpz_class& v) const {
    if (ch_.is_zero()) return v;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), ch_.value());
    return r;
}

mpz_class Tensor::coefficient(const Index& alpha) const {
    auto it = coords_.find(alpha);
    return it == coords_.end() ? mpz_class(0) : it->second;
}

void Tensor::add(const Index& alpha, const mpz_class& value) {
    if (alpha.size() != degree_ || alpha.universe() != 2 * n_)
        throw std::invalid_argument("Tensor::add: index " + to_string(alpha) +
                                    " does not match the tensor's degree");
    auto [it, inserted] = coords_.try_emplace(alpha, 0);
    it->second = normalize(it->second + value);
    if (it->second == 0) coords_.erase(it);
}

Tensor Tensor::scaled(const mpz_class& s) const {
    Tensor out(degree_, n_, ch_);
    for (const auto& [alpha, v] : coords_) out.add(alpha, v * s);
    return out;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.degree_ != b.degree_ || a.n_ != b.n_ || a.ch_ != b.ch_)
        throw std::invalid_argument("Tensor: operands live in different spaces");
    Tensor out = a;
    for (const auto& [alpha, v] : b.coords_) out.add(alpha, v);
    return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
    return a.degree_ == b.degree_ && a.n_ == b.n_ && a.ch_ == b.ch_ && a.coords_ == b.coords_;
}

Tensor Tensor::basis(const Index& alpha, int n, Characteristic ch) {
    Tensor t(alpha.size(), n, ch);
    t.add(alpha, 1);
    return t;
}

Tensor contract_tensor(const Tensor& w, FormConvention conv) {
    if (w.degree() != w.n())
        throw std::invalid_argument("contract_tensor: expected degree n = " +
                                    std::to_string(w.n()) + ", got " + std::to_string(w.degree()));
    if (w.n() < 2) throw std::invalid_argument("contract_tensor: n must be >= 2");
    Tensor out(w.n() - 2, w.n(), w.characteristic());
    for (const auto& [alpha, value] : w.coords())
        for (const auto& term : contract_basis(alpha, conv)) out.add(term.index, value * term.coefficient);
    return out;
}

// --- relations and the matrix ----------------------------------------------

PluckerRelation build_relation(const Index& pivot, int n, FormConvention conv) {
    if (n < 2) throw std::invalid_argument("build_relation: n must be >= 2");
    if (pivot.size() != n - 2)
        throw std::invalid_argument("build_relation: pivot length must be n-2");
    require_symplectic_universe(pivot, n, "build_relation");

    PluckerRelation rel{pivot, {}};
    for (int i = 1; i <= n; ++i) {
        const int partner = 2 * n + 1 - i;
        // The support condition |supp{i, pivot, 2n+1-i}| = n.
        if (pivot.contains(i) || pivot.contains(partner)) continue;
        const int added[] = {i, partner};
        Index target = pivot.with(added);
        int coeff = form_eval(i, partner, n, conv);
        if (conv == FormConvention::Signed) coeff *= koszul_sign(target.position(i), target.position(partner));
        rel.terms.push_back({std::move(target), coeff});
    }
    std::sort(rel.terms.begin(), rel.terms.end(),
              [](const ContractionTerm& a, const ContractionTerm& b) { return a.index < b.index; });
    return rel;
}

SparseIntMatrix build_matrix(int n, FormConvention conv, int max_n) {
    if (n < 2 || n > max_n)
        throw std::invalid_argument("build_matrix: n = " + std::to_string(n) + " outside [2, " +
                                    std::to_string(max_n) + "]");
    const auto pivots = enumerate_indices(n - 2, 2 * n);
    std::vector<MatrixEntry> entries;
    entries.reserve(pivots.size() * static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (const auto& term : build_relation(pivots[r], n, conv).terms)
            entries.push_back({r, static_cast<std::size_t>(rank_index(term.index)), term.coefficient});
    }
    return SparseIntMatrix(pivots.size(), binomial(2 * n, n), std::move(entries));
}

} // namespace lgs
