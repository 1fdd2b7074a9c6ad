#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lgsection/blocks.hpp"
#include "lgsection/combinatorics.hpp"
#include "lgsection/plucker.hpp"

using namespace lgs;

namespace {

std::vector<std::size_t> shuffled(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Breadth-first connectivity of a component's bipartite graph.
bool connected(const SparseIntMatrix& m) {
    if (m.rows() == 0) return true;
    std::vector<bool> row_seen(m.rows(), false), col_seen(m.cols(), false);
    row_seen[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : m.entries()) {
            if (row_seen[e.row] != col_seen[e.col]) {
                row_seen[e.row] = col_seen[e.col] = true;
                grew = true;
            }
        }
    }
    return std::all_of(row_seen.begin(), row_seen.end(), [](bool b) { return b; }) &&
           std::all_of(col_seen.begin(), col_seen.end(), [](bool b) { return b; });
}

} // namespace

TEST_CASE("decompose trivial inputs") {
    const auto z = decompose(SparseIntMatrix(3, 3, {}));
    CHECK(z.components.empty());
    CHECK(z.isolated_columns == std::vector<std::size_t>{0, 1, 2});
    CHECK(z.empty_rows == std::vector<std::size_t>{0, 1, 2});

    const auto d2 = decompose(build_matrix(2, FormConvention::Plain));
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].shape() == Shape{1, 2});
    CHECK(d2.isolated_columns.size() == 4);
}

TEST_CASE("decompose B for n = 6 into the predicted blocks") {
    const auto b = build_matrix(6, FormConvention::Plain);
    const auto d = decompose(b);
    CHECK(d.shape_counts() == std::map<Shape, std::size_t>{{{15, 20}, 1}, {{4, 6}, 60}, {{1, 2}, 240}});
    CHECK(d.isolated_columns.size() == 64);
    CHECK(d.empty_rows.empty());

    // Partition invariants.
    std::set<std::size_t> rows, cols(d.isolated_columns.begin(), d.isolated_columns.end());
    std::size_t last_first_row = 0;
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        const auto& comp = d.components[k];
        if (k > 0) CHECK(comp.rows.front() > last_first_row);
        last_first_row = comp.rows.front();
        for (auto r : comp.rows) REQUIRE(rows.insert(r).second);
        for (auto c : comp.cols) REQUIRE(cols.insert(c).second);
        REQUIRE(connected(comp.block));
        // The block is the submatrix on its rows and columns.
        for (const auto& e : comp.block.entries()) REQUIRE(b.at(comp.rows[e.row], comp.cols[e.col]) == e.value);
    }
    CHECK(rows.size() == b.rows());
    CHECK(cols.size() == b.cols());
}

TEST_CASE("components line up with the dual-pair partition of the pivots") {
    const auto d = decompose(build_matrix(6, FormConvention::Plain));
    std::map<PartitionClass, std::set<std::size_t>> by_class;
    for (std::size_t r = 0; r < 495; ++r) by_class[partition_class(unrank_index(r, 4, 12), 6)].insert(r);
    for (const auto& comp : d.components) {
        const std::set<std::size_t> rows(comp.rows.begin(), comp.rows.end());
        const auto cls = partition_class(unrank_index(comp.rows.front(), 4, 12), 6);
        REQUIRE(by_class.at(cls) == rows);
        if (comp.shape() == Shape{15, 20}) CHECK(cls.pair_count == 2);
        if (comp.shape() == Shape{4, 6}) CHECK(cls.pair_count == 1);
        if (comp.shape() == Shape{1, 2}) CHECK(cls.pair_count == 0);
    }
}

TEST_CASE("blockwise ranks for n = 6") {
    const auto b = build_matrix(6, FormConvention::Plain);
    const auto r3 = blockwise_rank(b, Characteristic::prime(3));
    CHECK(r3.total == 494);
    CHECK(r3.by_shape.at({15, 20}) == std::vector<std::size_t>{14});
    CHECK(r3.by_shape.at({4, 6}) == std::vector<std::size_t>(60, 4));
    CHECK(r3.by_shape.at({1, 2}) == std::vector<std::size_t>(240, 1));
    CHECK(blockwise_rank(b, Characteristic::zero()).total == 495);
    CHECK(blockwise_rank(b, Characteristic::prime(2)).total == 430);
}

TEST_CASE("blockwise rank equals whole-matrix rank on small n") {
    for (int n = 2; n <= 5; ++n)
        for (auto conv : {FormConvention::Plain, FormConvention::Signed})
            for (std::uint64_t cv : {0ull, 2ull, 3ull, 5ull, 7ull}) {
                const auto b = build_matrix(n, conv);
                const auto c = Characteristic::of(cv);
                REQUIRE(blockwise_rank(b, c).total == rank_dense(b, c));
            }
}

TEST_CASE("component ranks are permutation invariant") {
    std::mt19937_64 rng(8);
    const auto d = decompose(build_matrix(6, FormConvention::Plain));
    for (const auto& comp : d.components) {
        if (comp.shape() == Shape{1, 2}) continue;
        const auto pm = comp.block.permuted(shuffled(rng, comp.block.rows()), shuffled(rng, comp.block.cols()));
        for (std::uint64_t cv : {0ull, 2ull, 3ull}) {
            const auto c = Characteristic::of(cv);
            REQUIRE(rank(pm, c) == rank(comp.block, c));
        }
    }
}

TEST_CASE("match_template") {
    const auto d = decompose(build_matrix(6, FormConvention::Plain));
    for (const auto& comp : d.components) {
        if (comp.shape() == Shape{15, 20}) CHECK(match_template(comp.block, templates::pair_triple_block()));
        if (comp.shape() == Shape{4, 6}) REQUIRE(match_template(comp.block, templates::single_pair_block()));
        if (comp.shape() == Shape{1, 2}) REQUIRE(match_template(comp.block, templates::two_term_block()));
    }

    CHECK_THROWS_AS(match_template(templates::two_term_block(), templates::single_pair_block()),
                    std::invalid_argument);

    // Same row and column degrees, not equivalent: a 6-cycle versus two 3-cycles
    // as 6x6 incidence matrices.
    const auto hexagon = SparseIntMatrix::from_dense({{1, 1, 0, 0, 0, 0},
                                                      {0, 1, 1, 0, 0, 0},
                                                      {0, 0, 1, 1, 0, 0},
                                                      {0, 0, 0, 1, 1, 0},
                                                      {0, 0, 0, 0, 1, 1},
                                                      {1, 0, 0, 0, 0, 1}});
    const auto two_triangles = SparseIntMatrix::from_dense({{1, 1, 0, 0, 0, 0},
                                                            {0, 1, 1, 0, 0, 0},
                                                            {1, 0, 1, 0, 0, 0},
                                                            {0, 0, 0, 1, 1, 0},
                                                            {0, 0, 0, 0, 1, 1},
                                                            {0, 0, 0, 1, 0, 1}});
    CHECK_FALSE(match_template(hexagon, two_triangles));
    CHECK(match_template(hexagon, hexagon));

    std::mt19937_64 rng(3);
    const auto l4 = templates::pair_triple_block();
    for (int trial = 0; trial < 5; ++trial)
        CHECK(match_template(l4.permuted(shuffled(rng, 15), shuffled(rng, 20)), l4));

    // One flipped sign breaks equivalence with the 0/1 pattern.
    auto entries = templates::single_pair_block().entries();
    entries.front().value = -1;
    CHECK_FALSE(match_template(SparseIntMatrix(4, 6, entries), templates::single_pair_block()));
}
