#include "negcurv/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "negcurv/error.hpp"

namespace negcurv {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Next line that is neither blank nor a '%' comment.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '%') continue;
        return true;
    }
    return false;
}

SymMatrix finish(const Eigen::MatrixXd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (!m.allFinite()) throw InvalidInput("matrix has non-finite entries");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > kSymmetryTol * scale) {
                throw InvalidInput(fmt::format(
                    "matrix is not symmetric: entry ({},{}) = {} but ({},{}) = {}", i + 1, j + 1,
                    m(i, j), j + 1, i + 1, m(j, i)));
            }
        }
    }
    return SymMatrix::symmetrized(m);
}

SymMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("empty Matrix Market stream");
    std::istringstream header(line);
    std::string banner, object, layout, field, symmetry;
    header >> banner >> object >> layout >> field >> symmetry;
    if (banner != "%%MatrixMarket") throw InvalidInput("missing %%MatrixMarket banner");
    object = lower(object);
    layout = lower(layout);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix") throw InvalidInput("Matrix Market object must be 'matrix'");
    if (field != "real" && field != "integer" && field != "double") {
        throw InvalidInput("unsupported Matrix Market field '" + field + "'");
    }
    if (symmetry != "symmetric" && symmetry != "general") {
        throw InvalidInput("unsupported Matrix Market symmetry '" + symmetry + "'");
    }
    const bool symmetric = symmetry == "symmetric";

    if (!next_data_line(in, line)) throw InvalidInput("missing Matrix Market size line");
    std::istringstream size_line(line);

    if (layout == "coordinate") {
        long rows = 0, cols = 0, nnz = 0;
        if (!(size_line >> rows >> cols >> nnz)) throw InvalidInput("malformed size line");
        if (rows != cols) throw InvalidInput("matrix must be square");
        if (rows < 1 || nnz < 0) throw InvalidInput("invalid matrix size");
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
        for (long k = 0; k < nnz; ++k) {
            if (!next_data_line(in, line)) {
                throw InvalidInput(fmt::format("expected {} entries, found {}", nnz, k));
            }
            std::istringstream entry(line);
            long i = 0, j = 0;
            double v = 0.0;
            if (!(entry >> i >> j >> v)) throw InvalidInput("malformed entry: " + line);
            if (i < 1 || j < 1 || i > rows || j > cols) {
                throw InvalidInput(fmt::format("entry ({},{}) out of range", i, j));
            }
            if (symmetric && i < j) {
                throw InvalidInput("symmetric Matrix Market entries must lie in the lower triangle");
            }
            m(i - 1, j - 1) = v;
            if (symmetric) m(j - 1, i - 1) = v;
        }
        return finish(m);
    }
    if (layout == "array") {
        long rows = 0, cols = 0;
        if (!(size_line >> rows >> cols)) throw InvalidInput("malformed size line");
        if (rows != cols) throw InvalidInput("matrix must be square");
        if (rows < 1) throw InvalidInput("invalid matrix size");
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
        std::vector<double> values;
        while (next_data_line(in, line)) {
            std::istringstream ls(line);
            double v = 0.0;
            while (ls >> v) values.push_back(v);
            if (!ls.eof()) throw InvalidInput("malformed value: " + line);
        }
        // Column-major; symmetric storage lists the lower triangle only.
        const std::size_t expected = symmetric ? static_cast<std::size_t>(rows * (rows + 1) / 2)
                                               : static_cast<std::size_t>(rows * cols);
        if (values.size() != expected) {
            throw InvalidInput(fmt::format("expected {} values, found {}", expected, values.size()));
        }
        std::size_t k = 0;
        for (long j = 0; j < cols; ++j) {
            for (long i = symmetric ? j : 0; i < rows; ++i) {
                m(i, j) = values[k++];
                if (symmetric) m(j, i) = m(i, j);
            }
        }
        return finish(m);
    }
    throw InvalidInput("unsupported Matrix Market layout '" + layout + "'");
}

SymMatrix read_dense_text(std::istream& in) {
    long n = 0;
    if (!(in >> n)) throw InvalidInput("dense-text matrix must start with its dimension");
    if (n < 1) throw InvalidInput("invalid matrix size");
    Eigen::MatrixXd m(n, n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (!(in >> m(i, j))) {
                throw InvalidInput(fmt::format("dense-text matrix: missing entry ({},{})", i + 1, j + 1));
            }
        }
    }
    std::string trailing;
    if (in >> trailing) throw InvalidInput("dense-text matrix: trailing data '" + trailing + "'");
    return finish(m);
}

}  // namespace

MatrixFormat parse_matrix_format(std::string_view name) {
    if (name == "matrix-market" || name == "mm" || name == "mtx") return MatrixFormat::MatrixMarket;
    if (name == "dense-text" || name == "dense" || name == "txt") return MatrixFormat::DenseText;
    if (name == "auto") return MatrixFormat::Auto;
    throw InvalidInput("unknown matrix format '" + std::string(name) + "'");
}

SymMatrix read_matrix(std::istream& in, MatrixFormat format) {
    if (format == MatrixFormat::Auto) {
        std::string head(14, '\0');
        in >> std::ws;
        const auto start = in.tellg();
        in.read(head.data(), static_cast<std::streamsize>(head.size()));
        head.resize(static_cast<std::size_t>(in.gcount()));
        in.clear();
        in.seekg(start);
        format = head == "%%MatrixMarket" ? MatrixFormat::MatrixMarket : MatrixFormat::DenseText;
    }
    return format == MatrixFormat::MatrixMarket ? read_matrix_market(in) : read_dense_text(in);
}

SymMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file '" + path.string() + "'");
    try {
        return read_matrix(in, format);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_matrix_market(std::ostream& out, const SymMatrix& a) {
    const std::size_t n = a.dim();
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << fmt::format("{} {} {}\n", n, n, n * (n + 1) / 2);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) out << fmt::format("{} {} {}\n", i + 1, j + 1, a(i, j));
    }
}

void save_matrix_market(const std::filesystem::path& path, const SymMatrix& a) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write matrix file '" + path.string() + "'");
    write_matrix_market(out, a);
}

void write_dense_text(std::ostream& out, const SymMatrix& a) {
    const std::size_t n = a.dim();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << fmt::format("{}", a(i, j));
        out << '\n';
    }
}

}  // namespace negcurv
