#include "bures/metric.hpp"

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

void require_orthogonal(const Matrix& o) {
    if (o.rows() != o.cols()) {
        throw ValidationError("act: matrix not square");
    }
    const double resid =
        (o.transpose() * o - Matrix::Identity(o.rows(), o.cols())).norm();
    if (resid > 1e-10) {
        throw ValidationError("act: orthogonality residual " + std::to_string(resid));
    }
}

}  // namespace

double inner(const SPDMatrix& a, const SymmetricTangent& x, const SymmetricTangent& y) {
    require_same_dim(a.dim(), x.dim(), "inner");
    require_same_dim(a.dim(), y.dim(), "inner");
    const Matrix gy = gamma(a, y).value.entries();
    return 0.5 * (gy * x.entries()).trace();
}

double norm(const SPDMatrix& a, const SymmetricTangent& x) {
    double v = inner(a, x, x);
    if (v < 0.0) {
        if (v < -1e-12) {
            throw NumericError("norm: inner product " + std::to_string(v) +
                               " below the round-off clamp");
        }
        v = 0.0;
    }
    return std::sqrt(v);
}

double distance(const SPDMatrix& a1, const SPDMatrix& a2) {
    require_same_dim(a1.dim(), a2.dim(), "distance");
    if (a1.entries() == a2.entries()) {
        return 0.0;  // the trace would be round-off that the root amplifies
    }
    double t = (a1.entries() + a2.entries() - 2.0 * sqrt_product(a1, a2)).trace();
    if (t < 0.0) {
        if (t < -1e-12) {
            throw NumericError("distance: trace " + std::to_string(t) +
                               " below the round-off clamp");
        }
        t = 0.0;
    }
    return std::sqrt(t);
}

SPDMatrix project(const LiftMatrix& l) {
    try {
        return SPDMatrix(l.entries().transpose() * l.entries());
    } catch (const NotSpdError&) {
        throw DegeneracyError("project: L^T L fails the SPD gate");
    }
}

Matrix horizontal_lift(const LiftMatrix& l, const SymmetricTangent& x) {
    require_same_dim(l.dim(), x.dim(), "horizontal_lift");
    const SPDMatrix a = project(l);
    return l.entries() * gamma(a, x).value.entries();
}

SymmetricTangent dsigma(const LiftMatrix& l, const Matrix& v) {
    require_same_dim(l.dim(), static_cast<int>(v.rows()), "dsigma");
    if (v.rows() != v.cols()) {
        throw DimensionError("dsigma: tangent not square");
    }
    return SymmetricTangent(v.transpose() * l.entries() + l.entries().transpose() * v);
}

SPDMatrix act(const Matrix& o, const SPDMatrix& a) {
    require_orthogonal(o);
    require_same_dim(static_cast<int>(o.rows()), a.dim(), "act");
    return SPDMatrix(o * a.entries() * o.transpose());
}

SymmetricTangent act_tangent(const Matrix& o, const SymmetricTangent& x) {
    require_orthogonal(o);
    require_same_dim(static_cast<int>(o.rows()), x.dim(), "act_tangent");
    return SymmetricTangent(o * x.entries() * o.transpose());
}

}  // namespace bures
