#pragma once

#include <functional>
#include <string>

#include "bures/geodesy.hpp"
#include "bures/matrix.hpp"
#include "bures/metric.hpp"
#include "bures/sylvester.hpp"

namespace bures {

/// A smooth vector field on the manifold as a first-class value. The
/// covariant derivative needs the differential dY(X); fields that know it
/// analytically provide `differential`, everything else falls back to a
/// central finite difference.
struct VectorField {
    std::function<SymmetricTangent(const SPDMatrix&)> evaluate;
    std::function<SymmetricTangent(const SPDMatrix&, const SymmetricTangent&)>
        differential;  // may be empty
    std::string label;
};

/// dY(X) at A: the analytic differential when available, otherwise
/// [Y(A + hX) - Y(A - hX)] / (2h) with
/// h = sqrt(machine epsilon) (1 + ||A||_F) / (1 + ||X||_F). If a step
/// leaves the cone it is halved, at most 8 times.
SymmetricTangent directional_derivative(const VectorField& y, const SPDMatrix& a,
                                        const SymmetricTangent& x);

/// The connection: dY(X) - Gamma_A[X] A Gamma_A[Y] - Gamma_A[Y] A Gamma_A[X]
/// with X, Y the field values at A.
SymmetricTangent covariant_derivative(const VectorField& x_field,
                                      const VectorField& y_field, const SPDMatrix& a);

/// Vertical component of the lifted covariant derivative at lift L:
/// L Gamma_A[Gamma_A[X] Gamma_A[Y] - Gamma_A[Y] Gamma_A[X]] A. Antisymmetric
/// in (X, Y) and vertical: dsigma maps it to zero.
Matrix tensor_T(const LiftMatrix& l, const SymmetricTangent& x,
                const SymmetricTangent& y);

/// Covariant derivative of the velocity field along a curve, with velocity
/// and acceleration taken by central differences of step h. Vanishes along
/// geodesics.
SymmetricTangent covariant_derivative_along(const std::function<SPDMatrix(double)>& curve,
                                            double t, double h = 1e-4);

/// Covariant derivative of a field given along a curve (D_t V), with the
/// t-derivative of the field taken by a central difference of step h.
SymmetricTangent covariant_derivative_of_field_along(
    const std::function<SPDMatrix(double)>& curve,
    const std::function<SymmetricTangent(double)>& field, double t, double h = 1e-4);

}  // namespace bures
