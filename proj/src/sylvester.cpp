#include "bures/sylvester.hpp"

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

Matrix solve_sylvester(const Spectrum& a_spec, const Matrix& rhs) {
    const auto& q = a_spec.eigenvectors;
    const auto& lam = a_spec.eigenvalues;
    const Matrix c = q.transpose() * rhs * q;
    Matrix e(c.rows(), c.cols());
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
            e(i, j) = c(i, j) / (lam(i) + lam(j));
        }
    }
    return q * e * q.transpose();
}

GammaResult gamma(const SPDMatrix& a, const SymmetricTangent& x) {
    require_same_dim(a.dim(), x.dim(), "gamma");
    const Spectrum spec = eig_sym(a.entries());
    SymmetricTangent value(solve_sylvester(spec, x.entries()));
    const double residual = (a.entries() * value.entries() +
                             value.entries() * a.entries() - x.entries())
                                .norm();
    if (residual > 1e-10 * (1.0 + x.entries().norm())) {
        throw NumericError("gamma: defining residual " + std::to_string(residual) +
                           " exceeds bound");
    }
    return GammaResult{std::move(value), residual};
}

SymmetricTangent gamma_inverse_point(const SPDMatrix& a, const SymmetricTangent& x) {
    require_same_dim(a.dim(), x.dim(), "gamma_inverse_point");
    const Matrix g = gamma(a, x).value.entries();
    return SymmetricTangent(a.entries() * g * a.entries());
}

Matrix gamma_skew(const SPDMatrix& a, const Matrix& w) {
    require_same_dim(a.dim(), static_cast<int>(w.rows()), "gamma_skew");
    if (w.rows() != w.cols()) {
        throw DimensionError("gamma_skew: rhs not square");
    }
    const double asym = (w + w.transpose()).norm();
    if (asym > 1e-9 * (1.0 + w.norm())) {
        throw ValidationError("gamma_skew: rhs is not antisymmetric");
    }
    const Spectrum spec = eig_sym(a.entries());
    Matrix g = solve_sylvester(spec, w);
    return 0.5 * (g - g.transpose());
}

}  // namespace bures
