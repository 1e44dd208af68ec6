#pragma once

#include <optional>

#include "bures/matrix.hpp"
#include "bures/metric.hpp"
#include "bures/sylvester.hpp"

namespace bures {

/// Maximal geodesic extension: either a finite parameter bound or a
/// distinguished unbounded marker. The marker never enters arithmetic as a
/// floating-point infinity.
class Extension {
public:
    static Extension bounded(double v) { return Extension(v); }
    static Extension unbounded() { return Extension(); }

    bool is_bounded() const { return value_.has_value(); }

    /// The finite bound; throws if unbounded.
    double value() const {
        if (!value_) {
            throw RangeError("Extension: unbounded marker has no value");
        }
        return *value_;
    }

    /// True when the geodesic is defined at parameter t (t < bound).
    bool contains(double t) const { return !value_ || t < *value_; }

    /// min(bound, cap) for grid construction against unbounded rays.
    double clamp(double cap) const {
        return value_ && *value_ < cap ? *value_ : cap;
    }

private:
    Extension() = default;
    explicit Extension(double v) : value_(v) {}
    std::optional<double> value_;
};

/// Minimal geodesic between two points, evaluated at t in [0, 1]:
/// (1-t)^2 A1 + t(1-t)[(A1 A2)^{1/2} + (A2 A1)^{1/2}] + t^2 A2.
/// (A2 A1)^{1/2} is the transpose of (A1 A2)^{1/2}, so the bracket is
/// exactly symmetric. Use geodesic_ivp to extend past [0, 1].
SPDMatrix geodesic_point(const SPDMatrix& a1, const SPDMatrix& a2, double t);

/// Logarithm map: (A1 A2)^{1/2} + (A2 A1)^{1/2} - 2 A1.
SymmetricTangent log_map(const SPDMatrix& a1, const SPDMatrix& a2);

/// Exponential map: A + X + Gamma_A[X] A Gamma_A[X], defined while
/// 1 + lambda_min(Gamma_A[X]) stays above the gate; outside, throws
/// BoundaryError carrying the maximal extension.
SPDMatrix exp_map(const SPDMatrix& a, const SymmetricTangent& x);

/// Geodesic ray with initial velocity X evaluated at t in [0, eps_max).
SPDMatrix geodesic_ivp(const SPDMatrix& a, const SymmetricTangent& x, double t);

/// Largest parameter for which the ray stays inside the cone:
/// -1 / lambda_min(Gamma_A[X]) when that eigenvalue is negative, else
/// unbounded.
Extension max_extension(const SPDMatrix& a, const SymmetricTangent& x);

/// Distance from A to the boundary of the cone: sqrt(lambda_min(A) / 2).
double radius(const SPDMatrix& a);

/// The unit-speed-degenerated direction scaled by the paper's convention:
/// V = -2 lambda_min q q^T with q the eigenvector of lambda_min(A). Ties
/// broken by the lowest eigenvector index.
SymmetricTangent degenerate_direction(const SPDMatrix& a);

/// Endpoint lift A1^{-1/2} (A1 A2)^{1/2}: the level line from A1^{1/2} to it
/// projects onto the geodesic. The segment is checked for positive
/// determinant at t in {0, 0.1, ..., 1}.
LiftMatrix level_lift_endpoint(const SPDMatrix& a1, const SPDMatrix& a2);

/// The orthogonal matrix P = A1^{-1/2} (A1 A2)^{1/2} A2^{-1/2} with
/// P A2^{1/2} = level_lift_endpoint(A1, A2).
Matrix connecting_orthogonal(const SPDMatrix& a1, const SPDMatrix& a2);

/// A geodesic described either by its two endpoints or by an initial
/// velocity, together with its maximal parameter range.
class GeodesicSpec {
public:
    static GeodesicSpec between(const SPDMatrix& start, const SPDMatrix& end);
    static GeodesicSpec ray(const SPDMatrix& start, const SymmetricTangent& velocity);

    const SPDMatrix& start() const { return start_; }
    const Extension& t_max() const { return t_max_; }
    const SymmetricTangent& initial_velocity() const { return velocity_; }

    SPDMatrix at(double t) const;

private:
    GeodesicSpec(SPDMatrix start, SymmetricTangent velocity, Extension t_max)
        : start_(std::move(start)), velocity_(std::move(velocity)), t_max_(t_max) {}

    SPDMatrix start_;
    SymmetricTangent velocity_;
    Extension t_max_;
};

}  // namespace bures
