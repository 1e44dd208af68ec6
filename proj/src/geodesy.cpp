#include "bures/geodesy.hpp"

#include <cmath>
#include <string>

namespace bures {

namespace {

void require_same_dim(int a, int b, const char* who) {
    if (a != b) {
        throw DimensionError(std::string(who) + ": dimensions " + std::to_string(a) +
                             " and " + std::to_string(b) + " differ");
    }
}

double gamma_min_eigenvalue(const SPDMatrix& a, const SymmetricTangent& x) {
    const SymmetricTangent g = gamma(a, x).value;
    return eig_sym(g.entries()).eigenvalues(0);
}

}  // namespace

SPDMatrix geodesic_point(const SPDMatrix& a1, const SPDMatrix& a2, double t) {
    require_same_dim(a1.dim(), a2.dim(), "geodesic_point");
    if (!(t >= 0.0 && t <= 1.0)) {
        throw RangeError("geodesic_point: t = " + std::to_string(t) +
                         " outside [0, 1]");
    }
    const Matrix c = sqrt_product(a1, a2);
    const Matrix bracket = c + c.transpose();
    return SPDMatrix((1.0 - t) * (1.0 - t) * a1.entries() +
                     t * (1.0 - t) * bracket + t * t * a2.entries());
}

SymmetricTangent log_map(const SPDMatrix& a1, const SPDMatrix& a2) {
    require_same_dim(a1.dim(), a2.dim(), "log_map");
    const Matrix c = sqrt_product(a1, a2);
    return SymmetricTangent(c + c.transpose() - 2.0 * a1.entries());
}

SPDMatrix exp_map(const SPDMatrix& a, const SymmetricTangent& x) {
    require_same_dim(a.dim(), x.dim(), "exp_map");
    const Matrix g = gamma(a, x).value.entries();
    const double lam_min = eig_sym(g).eigenvalues(0);
    if (!(1.0 + lam_min > kEpsPd)) {
        throw BoundaryError("exp_map: tangent outside the maximal domain",
                            -1.0 / lam_min);
    }
    // Congruence form of A + X + G A G; stays accurate where the additive
    // form cancels catastrophically near the boundary.
    const Matrix factor = Matrix::Identity(a.dim(), a.dim()) + g;
    return SPDMatrix(factor * a.entries() * factor.transpose());
}

SPDMatrix geodesic_ivp(const SPDMatrix& a, const SymmetricTangent& x, double t) {
    require_same_dim(a.dim(), x.dim(), "geodesic_ivp");
    if (t < 0.0) {
        throw RangeError("geodesic_ivp: t = " + std::to_string(t) + " negative");
    }
    const Extension eps = max_extension(a, x);
    if (!eps.contains(t)) {
        throw BoundaryError("geodesic_ivp: t = " + std::to_string(t) +
                                " reaches the boundary",
                            eps.value());
    }
    return exp_map(a, SymmetricTangent(t * x.entries()));
}

Extension max_extension(const SPDMatrix& a, const SymmetricTangent& x) {
    require_same_dim(a.dim(), x.dim(), "max_extension");
    const double lam_min = gamma_min_eigenvalue(a, x);
    if (lam_min < 0.0) {
        return Extension::bounded(-1.0 / lam_min);
    }
    return Extension::unbounded();
}

double radius(const SPDMatrix& a) {
    const double lam_min = eig_sym(a.entries()).eigenvalues(0);
    return std::sqrt(0.5 * lam_min);
}

SymmetricTangent degenerate_direction(const SPDMatrix& a) {
    const Spectrum spec = eig_sym(a.entries());
    const double lam_min = spec.eigenvalues(0);
    const Vector q = spec.eigenvectors.col(0);
    return SymmetricTangent(-2.0 * lam_min * q * q.transpose());
}

LiftMatrix level_lift_endpoint(const SPDMatrix& a1, const SPDMatrix& a2) {
    require_same_dim(a1.dim(), a2.dim(), "level_lift_endpoint");
    const Matrix lift = spd_pow(a1, -0.5) * sqrt_product(a1, a2);
    const Matrix root1 = spd_pow(a1, 0.5);
    for (int k = 0; k <= 10; ++k) {
        const double t = 0.1 * k;
        const double det = (t * lift + (1.0 - t) * root1).determinant();
        if (!(det > 0.0)) {
            throw NumericError("level_lift_endpoint: segment degenerates at t=" +
                               std::to_string(t));
        }
    }
    return LiftMatrix(lift);
}

Matrix connecting_orthogonal(const SPDMatrix& a1, const SPDMatrix& a2) {
    require_same_dim(a1.dim(), a2.dim(), "connecting_orthogonal");
    const Matrix p = spd_pow(a1, -0.5) * sqrt_product(a1, a2) * spd_pow(a2, -0.5);
    const double resid =
        (p.transpose() * p - Matrix::Identity(p.rows(), p.cols())).norm();
    if (resid > 1e-9) {
        throw NumericError("connecting_orthogonal: orthogonality residual " +
                           std::to_string(resid));
    }
    return p;
}

GeodesicSpec GeodesicSpec::between(const SPDMatrix& start, const SPDMatrix& end) {
    SymmetricTangent velocity = log_map(start, end);
    return GeodesicSpec(start, velocity, max_extension(start, velocity));
}

GeodesicSpec GeodesicSpec::ray(const SPDMatrix& start, const SymmetricTangent& velocity) {
    require_same_dim(start.dim(), velocity.dim(), "GeodesicSpec::ray");
    return GeodesicSpec(start, velocity, max_extension(start, velocity));
}

SPDMatrix GeodesicSpec::at(double t) const {
    return geodesic_ivp(start_, velocity_, t);
}

}  // namespace bures
