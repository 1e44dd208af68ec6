#pragma once

#include "bures/matrix.hpp"

namespace bures {

/// Solution of A G + G A = X together with the Frobenius norm of the
/// defining residual. The residual is checked against
/// 1e-10 * (1 + ||X||_F) at construction time.
struct GammaResult {
    SymmetricTangent value;
    double residual;
};

/// Low-level solve on a precomputed spectrum of A: the rhs is rotated into
/// the eigenbasis, divided entrywise by lambda_i + lambda_j, and rotated
/// back. Valid for any square rhs; symmetry of the solution follows the
/// symmetry of the rhs.
Matrix solve_sylvester(const Spectrum& a_spec, const Matrix& rhs);

/// The Gamma operator: unique symmetric solution of A G + G A = X.
GammaResult gamma(const SPDMatrix& a, const SymmetricTangent& x);

/// Gamma at the inverse point without inverting: A Gamma_A[X] A.
SymmetricTangent gamma_inverse_point(const SPDMatrix& a, const SymmetricTangent& x);

/// Gamma applied to an antisymmetric rhs (a commutator of two symmetric
/// solutions); the solution is antisymmetric and is returned exactly so.
/// The connection and curvature formulas need this variant on their main
/// path.
Matrix gamma_skew(const SPDMatrix& a, const Matrix& w);

}  // namespace bures
