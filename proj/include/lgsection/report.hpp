#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgsection/blocks.hpp"
#include "lgsection/linalg.hpp"
#include "lgsection/plucker.hpp"

namespace lgs {

using Json = nlohmann::ordered_json;

// --- rank table ------------------------------------------------------------

struct RankRow {
    Characteristic characteristic = Characteristic::zero();
    std::size_t rank = 0;
    std::size_t nullity = 0;                // dim ker = C(2n, n) - rank
    std::size_t projective_codimension = 0; // of P(ker) inside P(wedge^n E); equals rank
    bool surjective = false;                // rank == C(2n, n-2)
    std::map<Shape, std::vector<std::size_t>> blocks;
};

struct RankReport {
    int n = 0;
    FormConvention convention = FormConvention::Plain;
    std::size_t ambient_rows = 0; // C(2n, n-2)
    std::size_t ambient_cols = 0; // C(2n, n)
    std::vector<RankRow> table;
};

RankReport build_rank_report(int n, const std::vector<Characteristic>& chars, FormConvention conv,
                             int max_n = kDefaultMaxN);

Json to_json(const RankReport& report);
std::string format_text(const RankReport& report);

// --- partition census and block structure ----------------------------------

Json partition_json(int n);
std::string partition_text(int n);

struct BlockSummary {
    int n = 0;
    FormConvention convention = FormConvention::Plain;
    std::map<Shape, std::size_t> shape_counts;
    std::size_t isolated_columns = 0;
    std::size_t components = 0;
};

BlockSummary summarize_blocks(int n, FormConvention conv, int max_n = kDefaultMaxN);
Json to_json(const BlockSummary& summary);
std::string format_text(const BlockSummary& summary);

// --- Lagrangian sampling ---------------------------------------------------

struct ConventionTally {
    FormConvention convention = FormConvention::Plain;
    std::size_t passed = 0;             // Lagrangian samples inside the kernel
    std::size_t negatives_rejected = 0; // non-isotropic controls outside the kernel
};

struct VerifySummary {
    int n = 0;
    std::uint64_t p = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t isotropic = 0; // samples passing the Gram check
    std::size_t negatives = 0; // number of negative controls run
    std::vector<ConventionTally> tallies; // plain, then signed
};

/// Runs `samples` random Lagrangians and as many non-isotropic controls.
///
/// Sample k uses the k-th output of std::mt19937_64(seed) as its own seed;
/// control k uses the (samples + k)-th. The first control is the fixed
/// coordinate subspace span{e_1..e_{n-1}, e_{n+2}}.
VerifySummary run_verification(int n, std::uint64_t p, std::size_t samples, std::uint64_t seed,
                               int steps = 40);

const ConventionTally& tally_for(const VerifySummary& s, FormConvention conv);
Json to_json(const VerifySummary& summary);
std::string format_text(const VerifySummary& summary);

// --- surjectivity scan -----------------------------------------------------

struct ScanRow {
    int n = 0;
    Characteristic characteristic = Characteristic::zero();
    std::size_t rank = 0;
    std::size_t target_dimension = 0; // C(2n, n-2)
    bool surjective = false;
};

std::vector<ScanRow> run_scan(const std::vector<int>& ns, const std::vector<Characteristic>& chars,
                              FormConvention conv, int max_n = kDefaultMaxN);
Json scan_json(const std::vector<ScanRow>& rows, FormConvention conv);
std::string scan_text(const std::vector<ScanRow>& rows);

} // namespace lgs
