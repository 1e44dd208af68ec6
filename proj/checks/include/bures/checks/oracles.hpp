#pragma once

#include "bures/matrix.hpp"
#include "bures/rng.hpp"

namespace bures::checks {

/// Independent Sylvester route: assembles (I (x) A + A^T (x) I) as a dense
/// n^2 x n^2 system and solves by LU. O(n^6), never on the library's main
/// path; the rhs may be non-symmetric.
Matrix sylvester_kron_solve(const Matrix& a, const Matrix& rhs);

/// Arc length of the endpoint geodesic by composite Simpson with the given
/// (even) number of panels; the velocity is the analytic derivative of the
/// curve polynomial.
double simpson_arc_length(const SPDMatrix& a1, const SPDMatrix& a2, int panels);

Matrix random_gaussian(Rng& rng, int n);
SymmetricTangent random_tangent(Rng& rng, int n);
SPDMatrix random_spd_draw(Rng& rng, int n);
Matrix random_orthogonal(Rng& rng, int n);
LiftMatrix random_lift(Rng& rng, int n);

}  // namespace bures::checks
