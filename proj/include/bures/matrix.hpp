#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "bures/errors.hpp"

namespace bures {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative positive-definiteness gate: a symmetric matrix is accepted as SPD
/// when its smallest eigenvalue exceeds kEpsPd times its largest.
inline constexpr double kEpsPd = 1e-12;

/// Symmetric n x n matrix; a tangent vector of SPD(n).
/// Entries are exactly symmetric: the constructor averages M and M^T.
class SymmetricTangent {
public:
    explicit SymmetricTangent(const Matrix& m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }

private:
    Matrix m_;
};

/// Validated symmetric positive-definite matrix; a point of the manifold.
/// Construction symmetrizes, then applies the relative gate; round-off
/// asymmetry in the input would otherwise poison every eigensolve downstream.
class SPDMatrix {
public:
    explicit SPDMatrix(const Matrix& m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }

private:
    Matrix m_;
};

/// Invertible n x n matrix in the total space GL(n); projects onto the
/// SPD point A = L^T L.
class LiftMatrix {
public:
    explicit LiftMatrix(const Matrix& m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }

private:
    Matrix m_;
};

/// Eigendecomposition of a symmetric matrix: eigenvalues ascending, the
/// columns of the orthogonal matrix Q paired with them.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const {
        return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
    }
};

/// (M + M^T) / 2. Throws DimensionError for non-square input.
SymmetricTangent symmetrize(const Matrix& m);

/// Symmetric eigendecomposition with a deterministic orientation: eigenvalues
/// ascending, each eigenvector flipped so its largest-magnitude entry is
/// positive (first occurrence wins ties). Only the lower triangle of s is
/// read. Throws NumericError with the residual if the decomposition fails
/// its reconstruction or orthogonality bound (1e-10).
Spectrum eig_sym(const Matrix& s);

/// Unique SPD square root Q diag(sqrt(lambda)) Q^T.
SPDMatrix sqrt_spd(const SPDMatrix& a);

/// Q diag(lambda^p) Q^T for real exponents; used for inverse and inverse
/// square roots.
Matrix spd_pow(const SPDMatrix& a, double p);

SPDMatrix inverse_spd(const SPDMatrix& a);

/// Square root of the non-symmetric product A1 A2, computed as
/// A1^{1/2} (A1^{1/2} A2 A1^{1/2})^{1/2} A1^{-1/2} so every eigensolve stays
/// symmetric. The result squared reproduces A1 A2 (checked, 1e-9 relative)
/// and has strictly positive spectrum.
Matrix sqrt_product(const SPDMatrix& a1, const SPDMatrix& a2);

/// Deterministic seeded generator: M^T M + 0.1 I with M filled with
/// independent standard normal entries (row-major order).
SPDMatrix random_spd(int n, std::uint64_t seed);

/// || a - b ||_F / (1 + ||b||_F); the relative-difference measure used by
/// every tolerance in this library.
double rel_diff(const Matrix& a, const Matrix& b);

}  // namespace bures
