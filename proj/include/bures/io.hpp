#pragma once

#include <string>

#include "bures/matrix.hpp"

namespace bures {

/// Raw parsed matrix file: JSON {"n": int, "data": [[row], ...]} or plain
/// CSV (n rows of n comma-separated reals, dimension inferred).
struct MatrixFile {
    int n;
    Matrix data;
};

MatrixFile read_matrix_file(const std::string& path);
MatrixFile parse_matrix_text(const std::string& text);

/// Relative asymmetry ||M - M^T||_F / ||M||_F above which an input file is
/// considered wrong rather than noisy.
inline constexpr double kMaxFileAsymmetry = 1e-9;

/// Reads and validates an SPD-typed argument: silent symmetrization below
/// the asymmetry gate, then the SPD gate.
SPDMatrix read_spd(const std::string& path);

/// Reads a symmetric-tangent argument with the same asymmetry gate.
SymmetricTangent read_tangent(const std::string& path);

/// Shortest round-trip decimal representation; locale-independent.
std::string format_double(double v);

/// Fixed 12-decimal representation used by the distance command.
std::string format_fixed12(double v);

/// Rows separated by newlines, entries by single spaces, shortest
/// round-trip decimals.
std::string format_matrix(const Matrix& m);

}  // namespace bures
