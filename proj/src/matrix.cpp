#include "bures/matrix.hpp"

#include <cmath>
#include <string>

#include "bures/rng.hpp"

namespace bures {

namespace {

void require_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(who) + ": matrix is " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
    if (m.rows() == 0) {
        throw DimensionError(std::string(who) + ": empty matrix");
    }
}

}  // namespace

SymmetricTangent::SymmetricTangent(const Matrix& m) {
    require_square(m, "SymmetricTangent");
    m_ = 0.5 * (m + m.transpose());
}

SPDMatrix::SPDMatrix(const Matrix& m) {
    require_square(m, "SPDMatrix");
    m_ = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("SPDMatrix: eigenvalue computation failed");
    }
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (!(hi > 0.0) || !(lo > kEpsPd * hi)) {
        throw NotSpdError("SPDMatrix: smallest eigenvalue " + std::to_string(lo) +
                          " fails the relative gate against largest " +
                          std::to_string(hi));
    }
}

LiftMatrix::LiftMatrix(const Matrix& m) {
    require_square(m, "LiftMatrix");
    const double det = m.determinant();
    if (!(std::abs(det) > kEpsPd)) {
        throw ValidationError("LiftMatrix: |det| = " + std::to_string(std::abs(det)) +
                              " fails the non-degeneracy gate");
    }
    m_ = m;
}

SymmetricTangent symmetrize(const Matrix& m) { return SymmetricTangent(m); }

Spectrum eig_sym(const Matrix& s) {
    require_square(s, "eig_sym");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eig_sym: iteration did not converge");
    }
    Spectrum result{solver.eigenvalues(), solver.eigenvectors()};

    // Deterministic orientation: dominant entry of each eigenvector positive.
    const int n = static_cast<int>(s.rows());
    for (int j = 0; j < n; ++j) {
        int idx = 0;
        result.eigenvectors.col(j).cwiseAbs().maxCoeff(&idx);
        if (result.eigenvectors(idx, j) < 0.0) {
            result.eigenvectors.col(j) = -result.eigenvectors.col(j);
        }
    }

    const Matrix sym = 0.5 * (s + s.transpose());
    const double rec = rel_diff(result.reconstruct(), sym);
    const double orth = (result.eigenvectors.transpose() * result.eigenvectors -
                         Matrix::Identity(n, n))
                            .norm();
    if (rec > 1e-10 || orth > 1e-10) {
        throw NumericError("eig_sym: residuals exceed bound, reconstruction=" +
                           std::to_string(rec) + " orthogonality=" + std::to_string(orth));
    }
    return result;
}

Matrix spd_pow(const SPDMatrix& a, double p) {
    Spectrum spec = eig_sym(a.entries());
    Vector powered = spec.eigenvalues.array().pow(p).matrix();
    Matrix out = spec.eigenvectors * powered.asDiagonal() * spec.eigenvectors.transpose();
    return 0.5 * (out + out.transpose());
}

SPDMatrix sqrt_spd(const SPDMatrix& a) { return SPDMatrix(spd_pow(a, 0.5)); }

SPDMatrix inverse_spd(const SPDMatrix& a) { return SPDMatrix(spd_pow(a, -1.0)); }

Matrix sqrt_product(const SPDMatrix& a1, const SPDMatrix& a2) {
    if (a1.dim() != a2.dim()) {
        throw DimensionError("sqrt_product: dimensions " + std::to_string(a1.dim()) +
                             " and " + std::to_string(a2.dim()) + " differ");
    }
    const Matrix root = spd_pow(a1, 0.5);
    const Matrix inv_root = spd_pow(a1, -0.5);
    const SPDMatrix conjugated(root * a2.entries() * root);
    const Matrix inner_root = spd_pow(conjugated, 0.5);
    Matrix result = root * inner_root * inv_root;

    const Matrix product = a1.entries() * a2.entries();
    const double resid = rel_diff(result * result, product);
    if (resid > 1e-9) {
        throw NumericError("sqrt_product: squaring residual " + std::to_string(resid));
    }
    return result;
}

SPDMatrix random_spd(int n, std::uint64_t seed) {
    if (n < 1) {
        throw DimensionError("random_spd: n must be >= 1");
    }
    Rng rng(seed);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = rng.normal();
        }
    }
    return SPDMatrix(m.transpose() * m + 0.1 * Matrix::Identity(n, n));
}

double rel_diff(const Matrix& a, const Matrix& b) {
    return (a - b).norm() / (1.0 + b.norm());
}

}  // namespace bures
