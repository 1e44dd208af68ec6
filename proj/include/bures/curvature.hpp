#pragma once

#include <span>

#include "bures/matrix.hpp"

namespace bures {

/// Index pair of a basis tangent S^{p,q} (entries delta^p_i delta^q_j +
/// delta^q_i delta^p_j); 1-based, normalized so p <= q.
struct BasisIndex {
    int p;
    int q;

    BasisIndex(int p_in, int q_in);

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// The basis tangent S^{p,q} at dimension n.
SymmetricTangent basis_tangent(int n, const BasisIndex& idx);

/// Per-point curvature summary over the eigenbasis of A.
struct CurvatureReport {
    Vector eigenvalues;  // ascending
    double scalar_curvature;
    double max_basis_sectional;
    double min_nonzero_basis_sectional;  // 0 when no pair has nonzero curvature
    double radius;
};

/// R(X, Y, X, Y) =
/// 3 tr(Gamma_A[X] A Gamma_A[Gamma_A[X] Gamma_A[Y] - Gamma_A[Y] Gamma_A[X]] A Gamma_A[Y]).
double curvature_value(const SPDMatrix& a, const SymmetricTangent& x,
                       const SymmetricTangent& y);

/// Sectional curvature: curvature_value over the Gram determinant of the
/// section. Throws DegeneracyError when the Gram determinant is below 1e-12.
double sectional(const SPDMatrix& a, const SymmetricTangent& x,
                 const SymmetricTangent& y);

/// Closed form for basis sections at a diagonal point. Nonzero only when the
/// index pattern matches p != q = r, p != t up to the symmetries
/// S^{a,b} = S^{b,a} and swapping the two sections; then
/// 3 (1 + delta^{rt}) lambda_p lambda_t /
/// ((lambda_p + lambda_r)(lambda_r + lambda_t)(lambda_p + lambda_t)).
double sectional_basis(std::span<const double> lambdas, const BasisIndex& s1,
                       const BasisIndex& s2);

/// Scalar curvature by the closed trace formula in the eigenbasis:
/// 3 tr(2 L U U^T + L U^T U + L U (U + U^T) L (U + U^T)) with
/// U_ij = 1 / (lambda_i + lambda_j) strictly above the diagonal.
double scalar_curvature(const SPDMatrix& a);

/// Independent triple-sum route to the scalar curvature (the sum of basis
/// sectional curvatures the trace formula compresses).
double scalar_sum_oracle(std::span<const double> lambdas);

/// Enumerates every unordered pair of basis sections on the eigenbasis of A
/// and aggregates the closed-form values. Enforces 0 <= K < 3 / lambda_min
/// for every pair and K <= 3 / (lambda_p + lambda_t) for pattern pairs;
/// violations throw NumericError (they would mean an internal inconsistency,
/// not bad input).
CurvatureReport curvature_report(const SPDMatrix& a);

}  // namespace bures
