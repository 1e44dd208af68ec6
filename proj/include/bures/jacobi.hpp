#pragma once

#include <span>

#include "bures/geodesy.hpp"
#include "bures/matrix.hpp"
#include "bures/metric.hpp"

namespace bures {

/// Data of a normal Jacobi field along the ray t -> exp_base(t X):
/// J(0) = 0 and (D_t J)(0) = Y with Y normal to X. Normality is enforced
/// at construction by projecting the seed against the velocity under the
/// metric at the base point.
class JacobiSpec {
public:
    JacobiSpec(SPDMatrix base, SymmetricTangent velocity, SymmetricTangent seed_derivative);

    const SPDMatrix& base() const { return base_; }
    const SymmetricTangent& velocity() const { return velocity_; }
    const SymmetricTangent& seed_derivative() const { return seed_; }
    const Extension& t_max() const { return t_max_; }

private:
    SPDMatrix base_;
    SymmetricTangent velocity_;
    SymmetricTangent seed_;
    Extension t_max_;
};

/// Closed form: t Y + t^2 (Gamma_A[X] A Gamma_A[Y] + Gamma_A[Y] A Gamma_A[X]).
SymmetricTangent jacobi_field(const JacobiSpec& spec, double t);

/// Geodesic-variation derivative
/// [exp_A(t(X + hY)) - exp_A(t(X - hY))] / (2h); the independent check of
/// the closed form. The variation is quadratic in h, so the central
/// difference carries no truncation term, only round-off.
SymmetricTangent variation_oracle(const JacobiSpec& spec, double t, double h = 1e-4);

/// min over the grid of ||J(t)||_{gamma(t)} / t; strictly positive values
/// witness the absence of conjugate points.
double min_jacobi_norm(const JacobiSpec& spec, std::span<const double> t_grid);

}  // namespace bures
