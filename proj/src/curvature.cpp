#include "bures/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bures/geodesy.hpp"
#include "bures/metric.hpp"
#include "bures/sylvester.hpp"

namespace bures {

namespace {

struct BasisPairValue {
    double value;
    bool pattern;  // matched the nonzero index pattern
    int p;         // pattern labels: the two non-shared indices
    int t;
};

void require_positive(std::span<const double> lambdas, const char* who) {
    if (lambdas.empty()) {
        throw ValidationError(std::string(who) + ": empty eigenvalue list");
    }
    for (double v : lambdas) {
        if (!(v > 0.0)) {
            throw ValidationError(std::string(who) + ": non-positive eigenvalue " +
                                  std::to_string(v));
        }
    }
}

/// Normalizes the two unordered index pairs against the section symmetries
/// and evaluates Theorem-style closed form. lambdas is 1-based via idx-1.
BasisPairValue basis_pair_value(std::span<const double> lambdas, BasisIndex s1,
                                BasisIndex s2) {
    const int n = static_cast<int>(lambdas.size());
    if (s1.q > n || s2.q > n) {
        throw ValidationError("sectional_basis: index exceeds dimension " +
                              std::to_string(n));
    }
    if (s1 == s2) {
        throw DegeneracyError("sectional_basis: identical sections");
    }

    // Shared index between {p,q} and {r,t}; both diagonal pairs sharing an
    // index would be identical, which was rejected above.
    auto shares = [](const BasisIndex& a, int m) { return a.p == m || a.q == m; };
    int shared = 0;
    if (shares(s2, s1.p)) {
        shared = s1.p;
    } else if (shares(s2, s1.q)) {
        shared = s1.q;
    } else {
        return {0.0, false, 0, 0};
    }

    // Put the off-diagonal section first; the pattern needs p != q = r.
    if (s1.p == s1.q) {
        std::swap(s1, s2);
    }
    if (s1.p == s1.q) {
        return {0.0, false, 0, 0};  // two diagonal sections commute
    }
    const int u = s1.p == shared ? s1.q : s1.p;
    const int v = s2.p == shared ? s2.q : s2.p;
    if (u == v) {
        return {0.0, false, 0, 0};  // same unordered pair reachable only via u==v
    }
    const double lp = lambdas[u - 1];
    const double lm = lambdas[shared - 1];
    const double lt = lambdas[v - 1];
    const double delta_rt = (v == shared) ? 1.0 : 0.0;
    const double value =
        3.0 * (1.0 + delta_rt) * lp * lt / ((lp + lm) * (lm + lt) * (lp + lt));
    return {value, true, u, v};
}

}  // namespace

BasisIndex::BasisIndex(int p_in, int q_in) : p(std::min(p_in, q_in)), q(std::max(p_in, q_in)) {
    if (p < 1) {
        throw ValidationError("BasisIndex: indices must be >= 1");
    }
}

SymmetricTangent basis_tangent(int n, const BasisIndex& idx) {
    if (idx.q > n) {
        throw DimensionError("basis_tangent: index exceeds dimension");
    }
    Matrix m = Matrix::Zero(n, n);
    m(idx.p - 1, idx.q - 1) += 1.0;
    m(idx.q - 1, idx.p - 1) += 1.0;
    return SymmetricTangent(m);
}

double curvature_value(const SPDMatrix& a, const SymmetricTangent& x,
                       const SymmetricTangent& y) {
    if (a.dim() != x.dim() || a.dim() != y.dim()) {
        throw DimensionError("curvature_value: dimensions differ");
    }
    const Spectrum spec = eig_sym(a.entries());
    const Matrix gx = solve_sylvester(spec, x.entries());
    const Matrix gy = solve_sylvester(spec, y.entries());
    const Matrix commutator = gx * gy - gy * gx;
    const Matrix g_raw = solve_sylvester(spec, commutator);
    const Matrix g_comm = 0.5 * (g_raw - g_raw.transpose());
    const Matrix& p = a.entries();
    return 3.0 * (gx * p * g_comm * p * gy).trace();
}

double sectional(const SPDMatrix& a, const SymmetricTangent& x,
                 const SymmetricTangent& y) {
    const double xx = inner(a, x, x);
    const double yy = inner(a, y, y);
    const double xy = inner(a, x, y);
    const double gram = xx * yy - xy * xy;
    if (!(gram > 1e-12)) {
        throw DegeneracyError("sectional: Gram determinant " + std::to_string(gram));
    }
    return curvature_value(a, x, y) / gram;
}

double sectional_basis(std::span<const double> lambdas, const BasisIndex& s1,
                       const BasisIndex& s2) {
    require_positive(lambdas, "sectional_basis");
    return basis_pair_value(lambdas, s1, s2).value;
}

double scalar_curvature(const SPDMatrix& a) {
    const Spectrum spec = eig_sym(a.entries());
    const int n = a.dim();
    const Vector& lam = spec.eigenvalues;
    Matrix u = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            u(i, j) = 1.0 / (lam(i) + lam(j));
        }
    }
    const Matrix l = lam.asDiagonal();
    const Matrix w = u + u.transpose();
    return 3.0 * (2.0 * l * u * u.transpose() + l * u.transpose() * u +
                  l * u * w * l * w)
                     .trace();
}

double scalar_sum_oracle(std::span<const double> lambdas) {
    require_positive(lambdas, "scalar_sum_oracle");
    const int n = static_cast<int>(lambdas.size());
    double total = 0.0;
    for (int p = 1; p <= n; ++p) {
        for (int r = p; r <= n; ++r) {
            const double f1 = lambdas[p - 1] * (p == r ? 2.0 : 1.0) /
                              (lambdas[p - 1] + lambdas[r - 1]);
            for (int t = 1; t <= n; ++t) {
                if (t == p) {
                    continue;
                }
                const double f2 =
                    (r == t ? 2.0 : 1.0) / (lambdas[r - 1] + lambdas[t - 1]);
                const double f3 = lambdas[t - 1] / (lambdas[t - 1] + lambdas[p - 1]);
                total += f1 * f2 * f3;
            }
        }
    }
    return 3.0 * total;
}

CurvatureReport curvature_report(const SPDMatrix& a) {
    const Spectrum spec = eig_sym(a.entries());
    const int n = a.dim();
    std::vector<double> lambdas(spec.eigenvalues.data(), spec.eigenvalues.data() + n);

    std::vector<BasisIndex> basis;
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            basis.emplace_back(p, q);
        }
    }
    const int count = static_cast<int>(basis.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            pairs.emplace_back(i, j);
        }
    }

    std::vector<BasisPairValue> values(pairs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
        values[k] = basis_pair_value(lambdas, basis[pairs[k].first], basis[pairs[k].second]);
    }

    const double lam_min = lambdas.front();
    double max_value = 0.0;
    double min_nonzero = 0.0;
    for (const auto& v : values) {
        if (!(v.value >= 0.0) || !(v.value < 3.0 / lam_min)) {
            throw NumericError("curvature_report: basis value " +
                               std::to_string(v.value) + " violates [0, 3/lambda_min)");
        }
        if (v.pattern) {
            const double bound = 3.0 / (lambdas[v.p - 1] + lambdas[v.t - 1]);
            if (v.value > bound * (1.0 + 1e-12)) {
                throw NumericError("curvature_report: pattern value exceeds 3/(lambda_p+lambda_t)");
            }
            min_nonzero = min_nonzero == 0.0 ? v.value : std::min(min_nonzero, v.value);
        }
        max_value = std::max(max_value, v.value);
    }

    return CurvatureReport{spec.eigenvalues, scalar_curvature(a), max_value,
                           min_nonzero, radius(a)};
}

}  // namespace bures
