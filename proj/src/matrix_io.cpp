#include "lgsection/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lgs {

namespace {
constexpr std::string_view kMatrixMarketHeader = "%%MatrixMarket matrix coordinate integer general";
}

MatrixFormat parse_matrix_format(std::string_view text) {
    if (text == "mtx") return MatrixFormat::MatrixMarket;
    if (text == "csv") return MatrixFormat::Csv;
    throw std::invalid_argument("unknown matrix format '" + std::string(text) + "' (expected mtx or csv)");
}

void write_matrix_market(const SparseIntMatrix& m, std::ostream& os) {
    os << kMatrixMarketHeader << '\n';
    os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (const auto& e : m.entries()) os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
}

void write_csv(const SparseIntMatrix& m, std::ostream& os) {
    os << "row,col,value\n";
    for (const auto& e : m.entries()) os << e.row + 1 << ',' << e.col + 1 << ',' << e.value << '\n';
}

void write_matrix(const SparseIntMatrix& m, MatrixFormat format, std::ostream& os) {
    if (format == MatrixFormat::MatrixMarket)
        write_matrix_market(m, os);
    else
        write_csv(m, os);
}

SparseIntMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::runtime_error("read_matrix_market: missing banner");
    if (line != kMatrixMarketHeader)
        throw std::runtime_error("read_matrix_market: only coordinate integer general is supported");
    while (std::getline(is, line) && !line.empty() && line.front() == '%') {
    }
    std::istringstream size_line(line);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(size_line >> rows >> cols >> nnz)) throw std::runtime_error("read_matrix_market: bad size line");

    std::vector<MatrixEntry> entries;
    entries.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::int64_t v = 0;
        if (!(is >> r >> c >> v) || r == 0 || c == 0)
            throw std::runtime_error("read_matrix_market: bad entry " + std::to_string(k + 1));
        entries.push_back({r - 1, c - 1, v});
    }
    try {
        return SparseIntMatrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("read_matrix_market: ") + e.what());
    }
}

SparseIntMatrix read_csv(std::istream& is, std::size_t rows, std::size_t cols) {
    std::string line;
    if (!std::getline(is, line) || line != "row,col,value")
        throw std::runtime_error("read_csv: missing header");
    std::vector<MatrixEntry> entries;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::size_t r = 0, c = 0;
        std::int64_t v = 0;
        char comma1 = 0, comma2 = 0;
        if (!(ls >> r >> comma1 >> c >> comma2 >> v) || comma1 != ',' || comma2 != ',' || r == 0 || c == 0)
            throw std::runtime_error("read_csv: bad line '" + line + "'");
        entries.push_back({r - 1, c - 1, v});
    }
    try {
        return SparseIntMatrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("read_csv: ") + e.what());
    }
}

} // namespace lgs
