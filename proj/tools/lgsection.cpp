// Command-line front end: rank tables, matrix export, partition census,
// block structure, Lagrangian sampling and surjectivity scans.
//
// Exit codes: 0 success, 1 verification or internal failure, 2 bad arguments,
// 3 I/O failure, 4 resource guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgsection/lagrangian.hpp"
#include "lgsection/linalg.hpp"
#include "lgsection/matrix_io.hpp"
#include "lgsection/plucker.hpp"
#include "lgsection/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadArgs = 2, kIoFailure = 3, kResourceGuard = 4 };

struct ExitError : std::runtime_error {
    ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

std::vector<lgs::Characteristic> parse_chars(const std::vector<std::string>& items) {
    std::vector<lgs::Characteristic> out;
    for (const auto& s : items) {
        try {
            out.push_back(lgs::Characteristic::parse(s));
        } catch (const std::invalid_argument& e) {
            throw ExitError(kBadArgs, e.what());
        }
    }
    if (out.empty()) throw ExitError(kBadArgs, "--chars must list at least one characteristic");
    return out;
}

lgs::FormConvention parse_conv(const std::string& s) {
    try {
        return lgs::parse_convention(s);
    } catch (const std::invalid_argument& e) {
        throw ExitError(kBadArgs, e.what());
    }
}

void check_n(int n, int max_n) {
    if (n < 2) throw ExitError(kBadArgs, "--n must be >= 2");
    if (n > max_n)
        throw ExitError(kResourceGuard, "--n " + std::to_string(n) + " exceeds the resource guard --max-n " +
                                            std::to_string(max_n));
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ExitError(kIoFailure, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw ExitError(kIoFailure, "failed writing '" + path + "'");
}

std::string dump(const lgs::Json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank and block structure of the Lagrangian-Grassmannian linear section"};
    app.require_subcommand(1);

    int max_n = lgs::kDefaultMaxN;
    app.add_option("--max-n", max_n, "Resource guard on n")->capture_default_str();

    int n = 6;
    std::vector<int> scan_ns{6};
    std::vector<std::string> chars_text{"0", "2", "3", "5"};
    std::string conv_text = "plain";
    std::string format_text = "mtx";
    std::string out_path;
    bool json = false;
    std::uint64_t p = 3;
    std::size_t samples = 100;
    std::uint64_t seed = 7;
    int steps = 40;

    auto add_conv = [&](CLI::App* sub) {
        sub->add_option("--convention", conv_text, "plain | signed")->capture_default_str();
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "Emit JSON instead of text");
        sub->add_option("--out", out_path, "Output file (default stdout)");
    };

    auto* table = app.add_subcommand("table", "Rank, nullity and surjectivity per characteristic");
    table->add_option("--n", n, "Half-dimension n")->capture_default_str();
    table->add_option("--chars", chars_text, "Comma-separated characteristics (0 or primes)")
        ->delimiter(',');
    add_conv(table);
    add_json(table);

    auto* matrix = app.add_subcommand("matrix", "Export the relation matrix");
    matrix->add_option("--n", n, "Half-dimension n")->capture_default_str();
    matrix->add_option("--format", format_text, "mtx | csv")->capture_default_str();
    matrix->add_option("--out", out_path, "Output file (default stdout)");
    add_conv(matrix);

    auto* partition = app.add_subcommand("partition", "Dual-pair partition census of the pivots");
    partition->add_option("--n", n, "Half-dimension n")->capture_default_str();
    add_json(partition);

    auto* blocks = app.add_subcommand("blocks", "Block-diagonal structure of the relation matrix");
    blocks->add_option("--n", n, "Half-dimension n")->capture_default_str();
    add_conv(blocks);
    add_json(blocks);

    auto* verify = app.add_subcommand("verify", "Check random Lagrangians against the kernel");
    verify->add_option("--n", n, "Half-dimension n")->capture_default_str();
    verify->add_option("--p", p, "Prime field size")->capture_default_str();
    verify->add_option("--samples", samples, "Number of random Lagrangians")->capture_default_str();
    verify->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    verify->add_option("--steps", steps, "Transvections per sample")->capture_default_str();
    add_conv(verify);
    add_json(verify);

    auto* scan = app.add_subcommand("scan", "Characteristics where the contraction fails to be onto");
    scan->add_option("--n", scan_ns, "Comma-separated list of n")->delimiter(',');
    scan->add_option("--chars", chars_text, "Comma-separated characteristics")->delimiter(',');
    add_conv(scan);
    add_json(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        const auto conv = parse_conv(conv_text);

        if (table->parsed()) {
            check_n(n, max_n);
            const auto report = lgs::build_rank_report(n, parse_chars(chars_text), conv, max_n);
            emit(json ? dump(lgs::to_json(report)) : lgs::format_text(report), out_path);
        } else if (matrix->parsed()) {
            check_n(n, max_n);
            lgs::MatrixFormat format;
            try {
                format = lgs::parse_matrix_format(format_text);
            } catch (const std::invalid_argument& e) {
                throw ExitError(kBadArgs, e.what());
            }
            std::ostringstream os;
            lgs::write_matrix(lgs::build_matrix(n, conv, max_n), format, os);
            emit(os.str(), out_path);
        } else if (partition->parsed()) {
            check_n(n, max_n);
            emit(json ? dump(lgs::partition_json(n)) : lgs::partition_text(n), out_path);
        } else if (blocks->parsed()) {
            check_n(n, max_n);
            const auto summary = lgs::summarize_blocks(n, conv, max_n);
            emit(json ? dump(lgs::to_json(summary)) : lgs::format_text(summary), out_path);
        } else if (verify->parsed()) {
            check_n(n, max_n);
            if (samples < 1) throw ExitError(kBadArgs, "--samples must be >= 1");
            if (steps < 0) throw ExitError(kBadArgs, "--steps must be >= 0");
            try {
                lgs::Characteristic::prime(p);
            } catch (const std::invalid_argument& e) {
                throw ExitError(kBadArgs, e.what());
            }
            const auto summary = lgs::run_verification(n, p, samples, seed, steps);
            emit(json ? dump(lgs::to_json(summary)) : lgs::format_text(summary), out_path);
            return lgs::tally_for(summary, conv).passed == samples ? kOk : kFailure;
        } else if (scan->parsed()) {
            if (scan_ns.empty()) throw ExitError(kBadArgs, "--n must list at least one value");
            for (int v : scan_ns) check_n(v, max_n);
            const auto rows = lgs::run_scan(scan_ns, parse_chars(chars_text), conv, max_n);
            emit(json ? dump(lgs::scan_json(rows, conv)) : lgs::scan_text(rows), out_path);
        }
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}
