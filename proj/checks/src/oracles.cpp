#include "bures/checks/oracles.hpp"

#include <string>

#include "bures/geodesy.hpp"
#include "bures/metric.hpp"

namespace bures::checks {

Matrix sylvester_kron_solve(const Matrix& a, const Matrix& rhs) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || rhs.rows() != n || rhs.cols() != n) {
        throw DimensionError("sylvester_kron_solve: shapes differ");
    }
    Matrix system = Matrix::Zero(n * n, n * n);
    const Matrix id = Matrix::Identity(n, n);
    // vec is column-major: vec(A G + G A) = (I (x) A + A^T (x) I) vec(G).
    for (Eigen::Index bi = 0; bi < n; ++bi) {
        for (Eigen::Index bj = 0; bj < n; ++bj) {
            system.block(bi * n, bj * n, n, n) =
                id(bi, bj) * a + a(bj, bi) * id;
        }
    }
    Eigen::VectorXd vec_rhs(n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        vec_rhs.segment(j * n, n) = rhs.col(j);
    }
    const Eigen::VectorXd sol = Eigen::PartialPivLU<Matrix>(system).solve(vec_rhs);
    Matrix out(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.col(j) = sol.segment(j * n, n);
    }
    return out;
}

double simpson_arc_length(const SPDMatrix& a1, const SPDMatrix& a2, int panels) {
    if (panels < 2 || panels % 2 != 0) {
        throw ValidationError("simpson_arc_length: panel count must be even and >= 2");
    }
    const Matrix c = sqrt_product(a1, a2);
    const Matrix bracket = c + c.transpose();
    const auto speed = [&](double t) {
        const Matrix point = (1.0 - t) * (1.0 - t) * a1.entries() +
                             t * (1.0 - t) * bracket + t * t * a2.entries();
        const Matrix velocity = -2.0 * (1.0 - t) * a1.entries() +
                                (1.0 - 2.0 * t) * bracket + 2.0 * t * a2.entries();
        return norm(SPDMatrix(point), SymmetricTangent(velocity));
    };
    const double h = 1.0 / panels;
    double sum = speed(0.0) + speed(1.0);
    for (int k = 1; k < panels; ++k) {
        sum += (k % 2 == 1 ? 4.0 : 2.0) * speed(k * h);
    }
    return sum * h / 3.0;
}

Matrix random_gaussian(Rng& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = rng.normal();
        }
    }
    return m;
}

SymmetricTangent random_tangent(Rng& rng, int n) {
    return symmetrize(random_gaussian(rng, n));
}

SPDMatrix random_spd_draw(Rng& rng, int n) {
    const Matrix m = random_gaussian(rng, n);
    return SPDMatrix(m.transpose() * m + 0.1 * Matrix::Identity(n, n));
}

Matrix random_orthogonal(Rng& rng, int n) {
    const Matrix m = random_gaussian(rng, n);
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) = -q.col(j);
        }
    }
    return q;
}

LiftMatrix random_lift(Rng& rng, int n) {
    // Condition-bounded draws: the projection squares the condition number
    // and the Sylvester residual gate cannot hold past eps * cond(L^T L).
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Matrix m = random_gaussian(rng, n);
        const Eigen::JacobiSVD<Matrix> svd(m);
        const double smin = svd.singularValues()(n - 1);
        if (smin <= 0.0 || svd.singularValues()(0) / smin > 50.0) {
            continue;
        }
        return LiftMatrix(m);
    }
    throw NumericError("random_lift: could not draw a well-conditioned lift");
}

}  // namespace bures::checks
