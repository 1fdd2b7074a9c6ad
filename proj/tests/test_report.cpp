#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lgsection/matrix_io.hpp"
#include "lgsection/report.hpp"

using namespace lgs;

namespace {

std::vector<Characteristic> chars(std::initializer_list<std::uint64_t> v) {
    std::vector<Characteristic> out;
    for (auto c : v) out.push_back(Characteristic::of(c));
    return out;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

} // namespace

TEST_CASE("rank report for n = 6") {
    const auto report = build_rank_report(6, chars({0, 2, 3, 5}), FormConvention::Plain);
    CHECK(report.ambient_rows == 495);
    CHECK(report.ambient_cols == 924);
    REQUIRE(report.table.size() == 4);
    const std::size_t ranks[] = {495, 430, 494, 495};
    const std::size_t nullities[] = {429, 494, 430, 429};
    const bool onto[] = {true, false, false, true};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& row = report.table[i];
        CHECK(row.rank == ranks[i]);
        CHECK(row.nullity == nullities[i]);
        CHECK(row.projective_codimension == row.rank);
        CHECK(row.surjective == onto[i]);
        CHECK(row.rank + row.nullity == 924);
    }
}

TEST_CASE("rank report for n = 2") {
    for (auto conv : {FormConvention::Plain, FormConvention::Signed}) {
        const auto report = build_rank_report(2, chars({0, 2}), conv);
        REQUIRE(report.table.size() == 2);
        for (const auto& row : report.table) {
            CHECK(row.rank == 1);
            CHECK(row.nullity == 5);
            CHECK(row.surjective);
        }
    }
}

TEST_CASE("JSON and text agree field for field") {
    const auto report = build_rank_report(6, chars({0, 2, 3, 5, 7}), FormConvention::Plain);
    const auto j = to_json(report);

    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "convention", "ambient", "table"});
    CHECK(j["ambient"]["rows"] == 495);
    CHECK(j["ambient"]["cols"] == 924);
    std::vector<std::string> row_keys;
    for (auto it = j["table"][0].begin(); it != j["table"][0].end(); ++it) row_keys.push_back(it.key());
    CHECK(row_keys ==
          std::vector<std::string>{"char", "rank", "nullity", "projective_codimension", "surjective", "blocks"});
    CHECK(j["table"][2]["blocks"]["15x20"] == std::vector<int>{14});
    CHECK(j["table"][2]["blocks"]["4x6"].size() == 60);

    std::istringstream text(format_text(report));
    std::string line;
    std::getline(text, line);
    CHECK(line.find("495 x 924") != std::string::npos);
    std::getline(text, line); // column header
    for (const auto& row : j["table"]) {
        REQUIRE(std::getline(text, line));
        const auto f = split_ws(line);
        REQUIRE(f.size() >= 5);
        CHECK(f[0] == std::to_string(row["char"].get<std::uint64_t>()));
        CHECK(f[1] == std::to_string(row["rank"].get<std::size_t>()));
        CHECK(f[2] == std::to_string(row["nullity"].get<std::size_t>()));
        CHECK(f[3] == std::to_string(row["projective_codimension"].get<std::size_t>()));
        CHECK(f[4] == (row["surjective"].get<bool>() ? "yes" : "no"));
    }
    CHECK(to_json(build_rank_report(6, chars({0, 2, 3, 5, 7}), FormConvention::Plain)).dump() == j.dump());
}

TEST_CASE("Matrix Market export") {
    const auto b6 = build_matrix(6, FormConvention::Plain);
    std::ostringstream os;
    write_matrix_market(b6, os);
    std::istringstream is(os.str());
    std::string header, size;
    std::getline(is, header);
    std::getline(is, size);
    CHECK(header == "%%MatrixMarket matrix coordinate integer general");
    CHECK(size == "495 924 1260");

    std::istringstream back(os.str());
    CHECK(read_matrix_market(back) == b6);

    std::ostringstream again;
    write_matrix_market(build_matrix(6, FormConvention::Plain), again);
    CHECK(again.str() == os.str());

    const auto s6 = build_matrix(6, FormConvention::Signed);
    std::ostringstream ss;
    write_matrix(s6, MatrixFormat::MatrixMarket, ss);
    std::istringstream sback(ss.str());
    CHECK(read_matrix_market(sback) == s6);
}

TEST_CASE("CSV export") {
    std::ostringstream os;
    write_csv(build_matrix(2, FormConvention::Plain), os);
    CHECK(os.str() == "row,col,value\n1,3,1\n1,4,1\n");

    const auto b5 = build_matrix(5, FormConvention::Signed);
    std::ostringstream big;
    write_csv(b5, big);
    std::istringstream back(big.str());
    CHECK(read_csv(back, b5.rows(), b5.cols()) == b5);
}

TEST_CASE("malformed matrix files are rejected") {
    std::istringstream no_banner("3 3 0\n");
    CHECK_THROWS_AS(read_matrix_market(no_banner), std::runtime_error);
    std::istringstream truncated("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n");
    CHECK_THROWS_AS(read_matrix_market(truncated), std::runtime_error);
    std::istringstream out_of_range("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 1\n");
    CHECK_THROWS_AS(read_matrix_market(out_of_range), std::runtime_error);
    std::istringstream bad_csv("row,col,value\n1;2;3\n");
    CHECK_THROWS_AS(read_csv(bad_csv, 2, 2), std::runtime_error);
    CHECK_THROWS_AS(parse_matrix_format("json"), std::invalid_argument);
}

TEST_CASE("partition report") {
    const auto j = partition_json(6);
    CHECK(j["total"] == 495);
    REQUIRE(j["parts"].size() == 3);
    CHECK(j["parts"][0]["pairs"] == 2);
    CHECK(j["parts"][0]["indices"] == 15);
    CHECK(j["parts"][1]["classes"] == 60);
    CHECK(j["parts"][1]["indices"] == 240);
    CHECK(j["parts"][2]["classes"] == 240);
    CHECK(j["parts"][2]["indices"] == 240);
    CHECK(partition_text(6).find("total 495") != std::string::npos);
}

TEST_CASE("block summaries") {
    const auto s6 = summarize_blocks(6, FormConvention::Plain);
    CHECK(s6.shape_counts == std::map<Shape, std::size_t>{{{15, 20}, 1}, {{4, 6}, 60}, {{1, 2}, 240}});
    CHECK(s6.isolated_columns == 64);
    const auto j = to_json(s6);
    CHECK(j["shapes"]["15x20"] == 1);
    CHECK(j["shapes"]["4x6"] == 60);
    CHECK(j["shapes"]["1x2"] == 240);
    CHECK(j["isolated_columns"] == 64);

    const auto s2 = summarize_blocks(2, FormConvention::Plain);
    CHECK(s2.shape_counts == std::map<Shape, std::size_t>{{{1, 2}, 1}});
    CHECK(s2.isolated_columns == 4);
}

TEST_CASE("verification summary") {
    const auto s = run_verification(4, 5, 10, 7);
    CHECK(s.isotropic == 10);
    CHECK(tally_for(s, FormConvention::Signed).passed == 10);
    CHECK(tally_for(s, FormConvention::Signed).negatives_rejected == 10);
    const auto again = run_verification(4, 5, 10, 7);
    CHECK(to_json(again).dump() == to_json(s).dump());
    CHECK_THROWS_AS(run_verification(4, 5, 0, 7), std::invalid_argument);
}

TEST_CASE("scan") {
    const auto rows = run_scan({2, 6}, chars({2, 3, 5, 7, 11}), FormConvention::Plain);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        if (r.n == 2) CHECK(r.rank == 1);
        const bool expect_drop = r.n == 6 && (r.characteristic.value() == 2 || r.characteristic.value() == 3);
        CHECK(r.surjective == !expect_drop);
    }
    const auto j = scan_json(rows, FormConvention::Plain);
    CHECK(j["drops"]["6"] == std::vector<int>{2, 3});
    CHECK(j["drops"]["2"].empty());
    CHECK(scan_text(rows).find("n = 6: rank drops at {2, 3}") != std::string::npos);
}
