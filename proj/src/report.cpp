#include "lgsection/report.hpp"

#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgsection/combinatorics.hpp"
#include "lgsection/lagrangian.hpp"

namespace lgs {

namespace {

std::string char_label(Characteristic c) { return std::to_string(c.value()); }

// "15x20:15  4x6:4*60" -- run-length form of the per-block ranks.
std::string compact_blocks(const std::map<Shape, std::vector<std::size_t>>& blocks) {
    std::ostringstream os;
    bool first_shape = true;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (!first_shape) os << "  ";
        first_shape = false;
        os << it->first.label() << ':';
        const auto& ranks = it->second;
        bool first_run = true;
        for (std::size_t i = 0; i < ranks.size();) {
            std::size_t j = i;
            while (j < ranks.size() && ranks[j] == ranks[i]) ++j;
            if (!first_run) os << ',';
            first_run = false;
            os << ranks[i];
            if (j - i > 1) os << '*' << (j - i);
            i = j;
        }
    }
    return os.str();
}

} // namespace

// --- rank table ------------------------------------------------------------

RankReport build_rank_report(int n, const std::vector<Characteristic>& chars, FormConvention conv,
                             int max_n) {
    const auto b = build_matrix(n, conv, max_n);
    const auto d = decompose(b);
    RankReport report;
    report.n = n;
    report.convention = conv;
    report.ambient_rows = b.rows();
    report.ambient_cols = b.cols();
    for (auto c : chars) {
        auto br = blockwise_rank(d, c);
        RankRow row;
        row.characteristic = c;
        row.rank = br.total;
        row.nullity = b.cols() - br.total;
        row.projective_codimension = br.total;
        row.surjective = br.total == b.rows();
        row.blocks = std::move(br.by_shape);
        report.table.push_back(std::move(row));
    }
    return report;
}

Json to_json(const RankReport& report) {
    Json j;
    j["n"] = report.n;
    j["convention"] = std::string(to_string(report.convention));
    j["ambient"] = {{"rows", report.ambient_rows}, {"cols", report.ambient_cols}};
    Json table = Json::array();
    for (const auto& row : report.table) {
        Json r;
        r["char"] = row.characteristic.value();
        r["rank"] = row.rank;
        r["nullity"] = row.nullity;
        r["projective_codimension"] = row.projective_codimension;
        r["surjective"] = row.surjective;
        Json blocks = Json::object();
        for (auto it = row.blocks.rbegin(); it != row.blocks.rend(); ++it) blocks[it->first.label()] = it->second;
        r["blocks"] = std::move(blocks);
        table.push_back(std::move(r));
    }
    j["table"] = std::move(table);
    return j;
}

std::string format_text(const RankReport& report) {
    std::ostringstream os;
    os << "n = " << report.n << ", convention = " << to_string(report.convention) << ", B is "
       << report.ambient_rows << " x " << report.ambient_cols << '\n';
    os << std::left << std::setw(6) << "char" << std::setw(7) << "rank" << std::setw(9) << "nullity"
       << std::setw(14) << "proj_codim" << std::setw(12) << "surjective" << "blocks\n";
    for (const auto& row : report.table) {
        os << std::left << std::setw(6) << char_label(row.characteristic) << std::setw(7) << row.rank
           << std::setw(9) << row.nullity << std::setw(14) << row.projective_codimension << std::setw(12)
           << (row.surjective ? "yes" : "no") << compact_blocks(row.blocks) << '\n';
    }
    return os.str();
}

// --- partition and blocks --------------------------------------------------

Json partition_json(int n) {
    const auto census = partition_census(n);
    Json j;
    j["n"] = n;
    Json parts = Json::array();
    std::uint64_t total = 0;
    for (auto it = census.rbegin(); it != census.rend(); ++it) {
        parts.push_back({{"pairs", it->first}, {"classes", it->second.classes}, {"indices", it->second.indices}});
        total += it->second.indices;
    }
    j["parts"] = std::move(parts);
    j["total"] = total;
    return j;
}

std::string partition_text(int n) {
    const auto census = partition_census(n);
    std::ostringstream os;
    os << "dual-pair partition of I(" << n - 2 << "," << 2 * n << ")\n";
    os << std::left << std::setw(7) << "pairs" << std::setw(9) << "classes" << "indices\n";
    std::uint64_t total = 0;
    for (auto it = census.rbegin(); it != census.rend(); ++it) {
        os << std::left << std::setw(7) << it->first << std::setw(9) << it->second.classes
           << it->second.indices << '\n';
        total += it->second.indices;
    }
    os << "total " << total << '\n';
    return os.str();
}

BlockSummary summarize_blocks(int n, FormConvention conv, int max_n) {
    const auto d = decompose(build_matrix(n, conv, max_n));
    return BlockSummary{n, conv, d.shape_counts(), d.isolated_columns.size(), d.components.size()};
}

Json to_json(const BlockSummary& summary) {
    Json j;
    j["n"] = summary.n;
    j["convention"] = std::string(to_string(summary.convention));
    Json shapes = Json::object();
    for (auto it = summary.shape_counts.rbegin(); it != summary.shape_counts.rend(); ++it)
        shapes[it->first.label()] = it->second;
    j["shapes"] = std::move(shapes);
    j["components"] = summary.components;
    j["isolated_columns"] = summary.isolated_columns;
    return j;
}

std::string format_text(const BlockSummary& summary) {
    std::ostringstream os;
    os << "block structure, n = " << summary.n << ", convention = " << to_string(summary.convention) << '\n';
    for (auto it = summary.shape_counts.rbegin(); it != summary.shape_counts.rend(); ++it)
        os << "  " << std::left << std::setw(8) << it->first.label() << " x " << it->second << '\n';
    os << "components " << summary.components << '\n';
    os << "isolated_columns " << summary.isolated_columns << '\n';
    return os.str();
}

// --- verification ----------------------------------------------------------

VerifySummary run_verification(int n, std::uint64_t p, std::size_t samples, std::uint64_t seed, int steps) {
    if (samples == 0) throw std::invalid_argument("run_verification: samples must be >= 1");
    VerifySummary s;
    s.n = n;
    s.p = p;
    s.samples = samples;
    s.seed = seed;
    s.negatives = samples;
    s.tallies = {{FormConvention::Plain, 0, 0}, {FormConvention::Signed, 0, 0}};

    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> seeds(2 * samples);
    for (auto& x : seeds) x = master();

    for (std::size_t k = 0; k < samples; ++k) {
        const auto w = random_lagrangian(n, p, seeds[k], steps);
        if (is_isotropic(w)) ++s.isotropic;
        for (auto& t : s.tallies)
            if (verify_kernel_membership(w, t.convention)) ++t.passed;
    }
    for (std::size_t k = 0; k < samples; ++k) {
        const auto w = random_non_isotropic(n, p, seeds[samples + k], k == 0 ? 0 : steps);
        for (auto& t : s.tallies)
            if (!verify_kernel_membership(w, t.convention)) ++t.negatives_rejected;
    }
    return s;
}

const ConventionTally& tally_for(const VerifySummary& s, FormConvention conv) {
    for (const auto& t : s.tallies)
        if (t.convention == conv) return t;
    throw std::logic_error("tally_for: convention missing");
}

Json to_json(const VerifySummary& summary) {
    Json j;
    j["n"] = summary.n;
    j["p"] = summary.p;
    j["samples"] = summary.samples;
    j["seed"] = summary.seed;
    j["isotropic"] = summary.isotropic;
    j["negative_controls"] = summary.negatives;
    Json conv = Json::object();
    for (const auto& t : summary.tallies)
        conv[std::string(to_string(t.convention))] = {{"passed", t.passed},
                                                      {"negatives_rejected", t.negatives_rejected}};
    j["conventions"] = std::move(conv);
    return j;
}

std::string format_text(const VerifySummary& summary) {
    std::ostringstream os;
    os << "n = " << summary.n << ", p = " << summary.p << ", samples = " << summary.samples
       << ", seed = " << summary.seed << '\n';
    os << "isotropic " << summary.isotropic << "/" << summary.samples << '\n';
    for (const auto& t : summary.tallies) {
        os << std::left << std::setw(8) << to_string(t.convention) << " in kernel " << t.passed << "/"
           << summary.samples << ", negative controls rejected " << t.negatives_rejected << "/"
           << summary.negatives << '\n';
    }
    return os.str();
}

// --- scan ------------------------------------------------------------------

std::vector<ScanRow> run_scan(const std::vector<int>& ns, const std::vector<Characteristic>& chars,
                              FormConvention conv, int max_n) {
    std::vector<ScanRow> out;
    for (int n : ns) {
        const auto b = build_matrix(n, conv, max_n);
        const auto d = decompose(b);
        for (auto c : chars) {
            const auto r = blockwise_rank(d, c).total;
            out.push_back({n, c, r, b.rows(), r == b.rows()});
        }
    }
    return out;
}

Json scan_json(const std::vector<ScanRow>& rows, FormConvention conv) {
    Json j;
    j["convention"] = std::string(to_string(conv));
    Json arr = Json::array();
    std::map<int, std::vector<std::uint64_t>> drops;
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"char", r.characteristic.value()},
                       {"rank", r.rank},
                       {"target_dimension", r.target_dimension},
                       {"surjective", r.surjective}});
        auto& d = drops[r.n];
        if (!r.surjective) d.push_back(r.characteristic.value());
    }
    j["rows"] = std::move(arr);
    Json dj = Json::object();
    for (const auto& [n, d] : drops) dj[std::to_string(n)] = d;
    j["drops"] = std::move(dj);
    return j;
}

std::string scan_text(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "n" << std::setw(7) << "char" << std::setw(8) << "rank"
       << std::setw(18) << "target_dimension" << "surjective\n";
    std::map<int, std::vector<std::uint64_t>> drops;
    for (const auto& r : rows) {
        os << std::left << std::setw(4) << r.n << std::setw(7) << r.characteristic.value() << std::setw(8)
           << r.rank << std::setw(18) << r.target_dimension << (r.surjective ? "yes" : "no") << '\n';
        auto& d = drops[r.n];
        if (!r.surjective) d.push_back(r.characteristic.value());
    }
    for (const auto& [n, d] : drops) {
        os << "n = " << n << ": rank drops at {";
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
        os << "}\n";
    }
    return os.str();
}

} // namespace lgs
