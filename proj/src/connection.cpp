#include "bures/connection.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bures {

namespace {

void require_same_dim(int a, int b, const char* who) {
    if (a != b) {
        throw DimensionError(std::string(who) + ": dimensions " + std::to_string(a) +
                             " and " + std::to_string(b) + " differ");
    }
}

}  // namespace

SymmetricTangent directional_derivative(const VectorField& y, const SPDMatrix& a,
                                        const SymmetricTangent& x) {
    require_same_dim(a.dim(), x.dim(), "directional_derivative");
    if (y.differential) {
        return y.differential(a, x);
    }
    double h = std::sqrt(std::numeric_limits<double>::epsilon()) *
               (1.0 + a.entries().norm()) / (1.0 + x.entries().norm());
    for (int attempt = 0; attempt <= 8; ++attempt) {
        try {
            const SPDMatrix forward(a.entries() + h * x.entries());
            const SPDMatrix backward(a.entries() - h * x.entries());
            return SymmetricTangent(
                (y.evaluate(forward).entries() - y.evaluate(backward).entries()) /
                (2.0 * h));
        } catch (const NotSpdError&) {
            h *= 0.5;
        }
    }
    throw NumericError("directional_derivative: step left the cone after 8 halvings");
}

SymmetricTangent covariant_derivative(const VectorField& x_field,
                                      const VectorField& y_field, const SPDMatrix& a) {
    const SymmetricTangent x = x_field.evaluate(a);
    const SymmetricTangent y = y_field.evaluate(a);
    const SymmetricTangent dyx = directional_derivative(y_field, a, x);
    const Matrix gx = gamma(a, x).value.entries();
    const Matrix gy = gamma(a, y).value.entries();
    return SymmetricTangent(dyx.entries() - gx * a.entries() * gy -
                            gy * a.entries() * gx);
}

Matrix tensor_T(const LiftMatrix& l, const SymmetricTangent& x,
                const SymmetricTangent& y) {
    require_same_dim(l.dim(), x.dim(), "tensor_T");
    require_same_dim(l.dim(), y.dim(), "tensor_T");
    const SPDMatrix a = project(l);
    const Spectrum spec = eig_sym(a.entries());
    const Matrix gx = solve_sylvester(spec, x.entries());
    const Matrix gy = solve_sylvester(spec, y.entries());
    const Matrix commutator = gx * gy - gy * gx;
    const Matrix skew = solve_sylvester(spec, commutator);
    return l.entries() * 0.5 * (skew - skew.transpose()) * a.entries();
}

SymmetricTangent covariant_derivative_along(const std::function<SPDMatrix(double)>& curve,
                                            double t, double h) {
    const Matrix before = curve(t - h).entries();
    const Matrix here = curve(t).entries();
    const Matrix after = curve(t + h).entries();
    const SymmetricTangent velocity((after - before) / (2.0 * h));
    const SymmetricTangent accel((after - 2.0 * here + before) / (h * h));
    const SPDMatrix point(here);
    const Matrix g = gamma(point, velocity).value.entries();
    return SymmetricTangent(accel.entries() - 2.0 * g * here * g);
}

SymmetricTangent covariant_derivative_of_field_along(
    const std::function<SPDMatrix(double)>& curve,
    const std::function<SymmetricTangent(double)>& field, double t, double h) {
    const Matrix before = curve(t - h).entries();
    const Matrix after = curve(t + h).entries();
    const SPDMatrix point = curve(t);
    const SymmetricTangent velocity((after - before) / (2.0 * h));
    const SymmetricTangent derivative(
        (field(t + h).entries() - field(t - h).entries()) / (2.0 * h));
    const Matrix gv = gamma(point, velocity).value.entries();
    const Matrix gf = gamma(point, field(t)).value.entries();
    const Matrix& p = point.entries();
    return SymmetricTangent(derivative.entries() - gv * p * gf - gf * p * gv);
}

}  // namespace bures
