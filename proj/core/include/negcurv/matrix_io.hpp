#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "negcurv/sym_matrix.hpp"

namespace negcurv {

enum class MatrixFormat {
    MatrixMarket,  // "coordinate real symmetric|general" or "array real general|symmetric"
    DenseText,     // first token n, then n rows of n numbers
    Auto,          // MatrixMarket iff the stream starts with "%%MatrixMarket"
};

MatrixFormat parse_matrix_format(std::string_view name);

/// Relative asymmetry accepted by the readers: |a_ij - a_ji| <= 1e-12 * max|a|.
inline constexpr double kSymmetryTol = 1e-12;

/// Parses a square matrix, checks numerical symmetry within kSymmetryTol
/// relative to the largest entry, and returns (M + M^T)/2.
SymMatrix read_matrix(std::istream& in, MatrixFormat format);
SymMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format);

/// Lower triangle as "coordinate real symmetric", full precision.
void write_matrix_market(std::ostream& out, const SymMatrix& a);
void save_matrix_market(const std::filesystem::path& path, const SymMatrix& a);
void write_dense_text(std::ostream& out, const SymMatrix& a);

}  // namespace negcurv
