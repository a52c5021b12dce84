#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fremder/matrix.hpp"

namespace fremder::io {

/// Matrix Market (array or coordinate; real, integer or complex field; general,
/// symmetric, skew-symmetric or hermitian symmetry, expanded on read).
ComplexMatrix read_matrix_market(std::istream& in);

/// Minimal text format: a line with n, then n*n lines "re im" in row-major order.
ComplexMatrix read_minimal(std::istream& in);

/// Dispatches on a leading "%%MatrixMarket" banner. Throws ParseError or DimensionError.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Complex general array format, entries with 17 significant digits.
void write_matrix_market(std::ostream& out, const ComplexMatrix& m);
void write_minimal(std::ostream& out, const ComplexMatrix& m);

/// FNV-1a 64-bit hash over the dimension and the IEEE-754 bits of every entry
/// (column-major, re before im), as 16 hex digits.
std::string matrix_digest(const ComplexMatrix& m);

}  // namespace fremder::io
