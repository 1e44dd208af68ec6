#pragma once

#include "bures/matrix.hpp"
#include "bures/sylvester.hpp"

namespace bures {

/// Metric tensor value (1/2) tr(Gamma_A[Y] X). Symmetric in X and Y and
/// equal to tr(Gamma_A[Y] A Gamma_A[X]).
double inner(const SPDMatrix& a, const SymmetricTangent& x, const SymmetricTangent& y);

/// sqrt(inner(a, x, x)); inner values in [-1e-12, 0) are treated as
/// round-off and clamped, anything lower is an error.
double norm(const SPDMatrix& a, const SymmetricTangent& x);

/// Closed-form distance: sqrt(tr(A1 + A2 - 2 (A1 A2)^{1/2})).
double distance(const SPDMatrix& a1, const SPDMatrix& a2);

/// Bundle projection L^T L.
SPDMatrix project(const LiftMatrix& l);

/// Horizontal lift of X at L: L Gamma_A[X] with A = project(L).
Matrix horizontal_lift(const LiftMatrix& l, const SymmetricTangent& x);

/// Push-forward of a total-space tangent V at L: V^T L + L^T V.
SymmetricTangent dsigma(const LiftMatrix& l, const Matrix& v);

/// Orthogonal action O A O^T; requires ||O^T O - I||_F <= 1e-10.
SPDMatrix act(const Matrix& o, const SPDMatrix& a);
SymmetricTangent act_tangent(const Matrix& o, const SymmetricTangent& x);

}  // namespace bures
