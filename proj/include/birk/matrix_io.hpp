#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "birk/matrix.hpp"

namespace birk {

enum class MatrixFormat { DenseText, Csv };

/// Parses a square matrix from a stream.
///
/// DenseText: n lines of n whitespace-separated decimal numbers; blank lines
/// and lines whose first non-blank character is '#' are ignored.
/// Csv: n records of n comma-separated decimal numbers, no header.
///
/// Numbers are decimal literals only -- fractions like "1/3" are rejected.
/// Ragged rows, non-numeric tokens, negative/NaN/infinite values and empty
/// files throw ValidationError.
DenseMatrix parse_matrix(std::istream& in, MatrixFormat format);

/// File variant; a missing or unreadable file throws ValidationError.
DenseMatrix parse_matrix(const std::filesystem::path& path, MatrixFormat format);

/// Shortest-width decimal form with 17 significant digits (round-trip exact
/// for binary64); used for every real the tool emits.
std::string format_real(double v);

/// Canonical byte form of a matrix: order line, then one line per row with
/// entries formatted by format_real and joined by single spaces. Both input
/// formats of the same matrix canonicalize identically.
std::string canonical_bytes(const DenseMatrix& m);

/// FNV-1a 64-bit fingerprint as 16 lowercase hex digits. Deterministic
/// content identifier for reports, not a cryptographic hash.
std::string fnv1a_hex(std::string_view bytes);

/// Writes the matrix as DenseText rows at 17 significant digits.
void write_dense(std::ostream& out, const DenseMatrix& m);

}  // namespace birk
