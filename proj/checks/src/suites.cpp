#include "bures/checks/suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "bures/checks/oracles.hpp"
#include "bures/connection.hpp"
#include "bures/curvature.hpp"
#include "bures/geodesy.hpp"
#include "bures/jacobi.hpp"
#include "bures/metric.hpp"
#include "bures/sylvester.hpp"

namespace bures::checks {

namespace {

// Spec-pinned tolerances that BURES_TOL does not move.
constexpr double kTolOracle = 1e-10;     // Algorithm 1 vs Kronecker solve
constexpr double kTolResidual = 1e-10;   // Sylvester defining residual
constexpr double kTolRoundTrip = 1e-8;   // exp/log round trips, level-line length
constexpr double kTolSimpson = 1e-6;     // arc length vs closed-form distance
constexpr double kTolFd = 2e-4;          // finite-difference dominated identities
constexpr double kTolSpeed = 1e-5;       // constant-speed check
constexpr double kTolJacobi = 1e-5;      // closed form vs variation oracle
constexpr double kTolWitness = 1e-8;     // no-conjugate-point witness
constexpr double kTolBasis = 1e-10;      // trace form vs closed basis form

double rel(const Matrix& a, const Matrix& b) { return rel_diff(a, b); }

double rel(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

SymmetricTangent scale(const SymmetricTangent& x, double k) {
    return SymmetricTangent(k * x.entries());
}

/// Polynomial field c0 A + c1 A^2 + c2 sym(A K A) with its analytic
/// differential; the building block of the connection suite.
VectorField polynomial_field(double c0, double c1, double c2, const Matrix& k,
                             const std::string& label) {
    VectorField field;
    field.label = label;
    field.evaluate = [=](const SPDMatrix& a) {
        const Matrix& m = a.entries();
        return SymmetricTangent(c0 * m + c1 * m * m + c2 * 0.5 * (m * k * m + (m * k * m).transpose()));
    };
    field.differential = [=](const SPDMatrix& a, const SymmetricTangent& x) {
        const Matrix& m = a.entries();
        const Matrix& v = x.entries();
        const Matrix t = v * k * m + m * k * v;
        return SymmetricTangent(c0 * v + c1 * (v * m + m * v) + c2 * 0.5 * (t + t.transpose()));
    };
    return field;
}

VectorField without_differential(const VectorField& f) {
    VectorField copy = f;
    copy.differential = nullptr;
    return copy;
}

void matcore_trial(int n, Rng& rng, TrialRecorder& rec) {
    const SymmetricTangent s = random_tangent(rng, n);
    const Spectrum spec = eig_sym(s.entries());
    rec.check("eig_reconstruct", rel(spec.reconstruct(), s.entries()), 1e-10);
    rec.check("eig_orthogonal",
              (spec.eigenvectors.transpose() * spec.eigenvectors -
               Matrix::Identity(n, n))
                  .norm(),
              1e-10);

    const SPDMatrix a = random_spd_draw(rng, n);
    const Matrix root = sqrt_spd(a).entries();
    rec.check("sqrt_spd_squares", rel(root * root, a.entries()), 1e-10);

    const SPDMatrix b = random_spd_draw(rng, n);
    const Matrix prod_root = sqrt_product(a, b);
    rec.check("sqrt_product_squares",
              rel(prod_root * prod_root, a.entries() * b.entries()), 1e-9);
    rec.check("sqrt_product_self", rel(sqrt_product(a, a), a.entries()), 1e-10);

    const std::uint64_t seed = rng.raw();
    rec.check("random_spd_deterministic",
              (random_spd(n, seed).entries() - random_spd(n, seed).entries()).norm(),
              0.0);
}

void sylvester_trial(int n, Rng& rng, TrialRecorder& rec) {
    const SPDMatrix a = random_spd_draw(rng, n);
    const SymmetricTangent x = random_tangent(rng, n);
    const SymmetricTangent y = random_tangent(rng, n);
    const double k = rng.uniform(0.25, 4.0);
    const Matrix q = random_orthogonal(rng, n);
    const SPDMatrix b = random_spd_draw(rng, n);
    const double tol = 1e-9;

    const GammaResult gx = gamma(a, x);
    const Matrix gxm = gx.value.entries();
    rec.check("defining_residual", gx.residual / (1.0 + x.entries().norm()),
              kTolResidual);

    const Matrix combined =
        gamma(a, SymmetricTangent(x.entries() + k * y.entries())).value.entries();
    rec.check("linearity",
              rel(combined, gxm + k * gamma(a, y).value.entries()), tol);

    const Matrix scaled =
        gamma(SPDMatrix(k * a.entries()), x).value.entries();
    rec.check("scaling", rel(scaled, gxm / k), tol);

    const SPDMatrix apb(a.entries() + b.entries());
    const Matrix gab = gamma(apb, x).value.entries();
    const Matrix perturbation =
        gamma(a, SymmetricTangent(b.entries() * gab + gab * b.entries()))
            .value.entries();
    rec.check("perturbation", rel(gab, gxm - perturbation), tol);

    // Non-symmetric right-hand sides go through the oracle route.
    rec.check("commutation_left",
              rel(sylvester_kron_solve(a.entries(), a.entries() * x.entries()),
                  a.entries() * gxm),
              tol);
    rec.check("commutation_right",
              rel(sylvester_kron_solve(a.entries(), x.entries() * a.entries()),
                  gxm * a.entries()),
              tol);

    rec.check("inversion",
              rel(gamma(inverse_spd(a), x).value.entries(),
                  a.entries() * gxm * a.entries()),
              tol);
    rec.check("inversion_point",
              rel(gamma_inverse_point(a, x).entries(),
                  a.entries() * gxm * a.entries()),
              tol);

    const SPDMatrix conjugated(q * a.entries() * q.transpose());
    rec.check("conjugation",
              rel(gamma(conjugated, SymmetricTangent(q * x.entries() * q.transpose()))
                      .value.entries(),
                  q * gxm * q.transpose()),
              tol);

    rec.check("kron_oracle", rel(gxm, sylvester_kron_solve(a.entries(), x.entries())),
              kTolOracle);
}

void submersion_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const LiftMatrix l = random_lift(rng, n);
    const SPDMatrix a = project(l);
    const SymmetricTangent x = random_tangent(rng, n);
    const SymmetricTangent y = random_tangent(rng, n);

    const Matrix lift_x = horizontal_lift(l, x);
    const Matrix lift_y = horizontal_lift(l, y);
    const double g_w = inner(a, x, y);
    rec.check("submersion_inner",
              rel((lift_x.transpose() * lift_y).trace(), g_w), tol);

    rec.check("inner_two_forms",
              rel(g_w, (gamma(a, y).value.entries() * a.entries() *
                        gamma(a, x).value.entries())
                           .trace()),
              tol);
    rec.check("inner_symmetric", rel(g_w, inner(a, y, x)), tol);
    const double xx = inner(a, x, x);
    rec.check("inner_positive", xx > 0.0 ? 0.0 : 1.0, 0.0);

    rec.check("lift_projects_back", rel(dsigma(l, lift_x).entries(), x.entries()),
              tol);
    rec.check("lift_level_conditions",
              rel(lift_x.transpose() * l.entries() + l.entries().transpose() * lift_x,
                  x.entries()),
              tol);
    const Matrix sym_part = l.entries().inverse() * lift_x;
    rec.check("lift_horizontal", (sym_part - sym_part.transpose()).norm() /
                                     (1.0 + sym_part.norm()),
              tol);

    const Matrix f_raw = random_gaussian(rng, n);
    const Matrix f = 0.5 * (f_raw - f_raw.transpose());
    const Matrix vertical = l.entries().transpose().inverse() * f;
    rec.check("vertical_killed",
              dsigma(l, vertical).entries().norm() / (1.0 + f.norm()), tol);

    const SPDMatrix a2 = random_spd_draw(rng, n);
    const SPDMatrix a3 = random_spd_draw(rng, n);
    rec.check("distance_self", distance(a, a), tol);
    rec.check("distance_symmetric", rel(distance(a, a2), distance(a2, a)), tol);
    const double d12 = distance(a, a2);
    const double d23 = distance(a2, a3);
    const double d13 = distance(a, a3);
    rec.check("triangle_inequality", std::max(0.0, d13 - d12 - d23), 1e-9);

    const Matrix o1 = random_orthogonal(rng, n);
    const Matrix o2 = random_orthogonal(rng, n);
    rec.check("action_metric_invariant",
              rel(inner(act(o1, a), act_tangent(o1, x), act_tangent(o1, y)), g_w),
              tol);
    rec.check("action_distance_invariant",
              rel(distance(act(o1, a), act(o1, a2)), d12), tol);
    rec.check("action_group_law",
              rel(act(o1 * o2, a).entries(), act(o1, act(o2, a)).entries()), tol);
}

void geodesy_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const SPDMatrix a1 = random_spd_draw(rng, n);
    const SPDMatrix a2 = random_spd_draw(rng, n);

    const SymmetricTangent log12 = log_map(a1, a2);
    rec.check("exp_log_round_trip",
              rel(exp_map(a1, log12).entries(), a2.entries()), kTolRoundTrip);

    SymmetricTangent x = random_tangent(rng, n);
    const Extension eps_x = max_extension(a1, x);
    if (eps_x.is_bounded()) {
        x = scale(x, 0.7 * eps_x.value());
    }
    rec.check("log_exp_round_trip",
              rel(log_map(a1, exp_map(a1, x)).entries(), x.entries()),
              kTolRoundTrip);

    rec.check("norm_of_log_is_distance", rel(norm(a1, log12), distance(a1, a2)),
              kTolRoundTrip);

    for (int i = 0; i <= 4; ++i) {
        const double t = 0.25 * i;
        rec.check("point_matches_ivp",
                  rel(geodesic_point(a1, a2, t).entries(),
                      geodesic_ivp(a1, log12, t).entries()),
                  tol);
    }

    // SPD-ness along the curve: the gate inside geodesic_point throws on
    // violation, which fails the trial.
    for (int i = 0; i <= 20; ++i) {
        geodesic_point(a1, a2, 0.05 * i);
    }

    const auto curve = [&](double t) {
        return geodesic_point(a1, a2, std::clamp(t, 0.0, 1.0));
    };
    const double fd_h = 1e-5;
    const auto speed_at = [&](double t) {
        const Matrix velocity =
            (geodesic_point(a1, a2, t + fd_h).entries() -
             geodesic_point(a1, a2, t - fd_h).entries()) /
            (2.0 * fd_h);
        return norm(curve(t), SymmetricTangent(velocity));
    };
    const double speed_mid = speed_at(0.5);
    double speed_dev = 0.0;
    for (int i = 1; i <= 9; ++i) {
        speed_dev = std::max(speed_dev, std::abs(speed_at(0.1 * i) - speed_mid));
    }
    rec.check("constant_speed", speed_dev / (1.0 + speed_mid), kTolSpeed);

    for (int i = 1; i <= 10; ++i) {
        const double t = i / 11.0;
        const Matrix d = covariant_derivative_along(curve, t).entries();
        const double speed_scale = 1.0 + log12.entries().norm();
        rec.check("geodesic_equation", d.norm() / speed_scale, kTolFd);
    }

    rec.check("arc_length_is_distance",
              std::abs(simpson_arc_length(a1, a2, 1000) - distance(a1, a2)),
              kTolSimpson);

    const Matrix o = random_orthogonal(rng, n);
    rec.check("isometry_equivariance",
              rel(geodesic_point(act(o, a1), act(o, a2), 0.3).entries(),
                  o * geodesic_point(a1, a2, 0.3).entries() * o.transpose()),
              tol);

    const LiftMatrix lift = level_lift_endpoint(a1, a2);
    rec.check("level_lift_projects", rel(project(lift).entries(), a2.entries()),
              tol);
    rec.check("level_lift_length",
              rel((lift.entries() - spd_pow(a1, 0.5)).norm(), distance(a1, a2)),
              kTolRoundTrip);

    const Matrix p = connecting_orthogonal(a1, a2);
    rec.check("connecting_maps_root",
              rel(p * spd_pow(a2, 0.5), lift.entries()), tol);
    rec.check("connecting_trace_maximal",
              rel((p * spd_pow(a2, 0.5) * spd_pow(a1, 0.5)).trace(),
                  sqrt_product(a1, a2).trace()),
              kTolRoundTrip);
}

void radius_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const SPDMatrix a = random_spd_draw(rng, n);
    const double r = radius(a);
    const double lam_min = eig_sym(a.entries()).eigenvalues(0);

    // The degenerate direction has squared metric norm lambda_min and its
    // ray degenerates at parameter 1, so the unit ray leaves the cone after
    // sqrt(lambda_min) = sqrt(2) * radius. The reported radius is a strict
    // lower bound on every extension.
    const SymmetricTangent v = degenerate_direction(a);
    rec.check("degenerate_norm", rel(inner(a, v, v), lam_min), tol);
    const Extension eps_raw = max_extension(a, v);
    rec.check("degenerate_unit_parameter",
              eps_raw.is_bounded() ? rel(eps_raw.value(), 1.0) : 1.0, tol);
    const SymmetricTangent unit_v = scale(v, 1.0 / norm(a, v));
    const Extension eps_v = max_extension(a, unit_v);
    const double degenerate_eps =
        eps_v.is_bounded() ? eps_v.value() : std::numeric_limits<double>::max();
    rec.check("degenerate_extension_value",
              eps_v.is_bounded() ? rel(degenerate_eps, std::sqrt(lam_min)) : 1.0, tol);

    for (int i = 0; i < 20; ++i) {
        SymmetricTangent u = random_tangent(rng, n);
        u = scale(u, 1.0 / norm(a, u));
        const Extension eps = max_extension(a, u);
        if (eps.is_bounded()) {
            rec.check("radius_lower_bound",
                      std::max(0.0, (r - 1e-6) - eps.value()), 0.0);
            rec.check("degenerate_attains_min",
                      std::max(0.0, (degenerate_eps - 1e-6) - eps.value()), 0.0);
        }
    }

    // The degenerate ray is defined just inside its extension and rejected
    // just past it.
    geodesic_ivp(a, unit_v, 0.999 * degenerate_eps);
    try {
        geodesic_ivp(a, unit_v, 1.001 * degenerate_eps);
        rec.fail("boundary_not_enforced");
    } catch (const BoundaryError&) {
    }
}

void connection_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const SPDMatrix a = random_spd_draw(rng, n);
    const Matrix k = random_tangent(rng, n).entries();
    const VectorField y_field = polynomial_field(
        rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), k, "Y");
    const VectorField z_field = polynomial_field(
        rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), k, "Z");
    const SymmetricTangent x = random_tangent(rng, n);
    VectorField x_field;
    x_field.label = "X";
    x_field.evaluate = [x](const SPDMatrix&) { return x; };
    x_field.differential = [n](const SPDMatrix&, const SymmetricTangent&) {
        return SymmetricTangent(Matrix::Zero(n, n));
    };

    // dY(X) by finite differences against the analytic differential.
    rec.check("directional_derivative",
              rel(directional_derivative(without_differential(y_field), a, x).entries(),
                  y_field.differential(a, x).entries()),
              2e-6);

    const SymmetricTangent nabla_xy = covariant_derivative(x_field, y_field, a);
    const SymmetricTangent nabla_xz = covariant_derivative(x_field, z_field, a);

    // Metric compatibility, the inner-product derivative by central FD.
    const double h = std::sqrt(std::numeric_limits<double>::epsilon()) *
                     (1.0 + a.entries().norm()) / (1.0 + x.entries().norm());
    const SPDMatrix forward(a.entries() + h * x.entries());
    const SPDMatrix backward(a.entries() - h * x.entries());
    const double lhs = (inner(forward, y_field.evaluate(forward), z_field.evaluate(forward)) -
                        inner(backward, y_field.evaluate(backward), z_field.evaluate(backward))) /
                       (2.0 * h);
    const double rhs = inner(a, nabla_xy, z_field.evaluate(a)) +
                       inner(a, y_field.evaluate(a), nabla_xz);
    rec.check("metric_compatibility", rel(lhs, rhs), kTolFd);

    // Torsion: FD covariant derivatives against the analytic bracket.
    VectorField w_field = polynomial_field(rng.uniform(-1.0, 1.0),
                                           rng.uniform(-0.5, 0.5),
                                           rng.uniform(-0.5, 0.5), k, "W");
    const SymmetricTangent lhs_t =
        SymmetricTangent(covariant_derivative(without_differential(w_field),
                                              without_differential(y_field), a)
                             .entries() -
                         covariant_derivative(without_differential(y_field),
                                              without_differential(w_field), a)
                             .entries());
    const SymmetricTangent bracket =
        SymmetricTangent(y_field.differential(a, w_field.evaluate(a)).entries() -
                         w_field.differential(a, y_field.evaluate(a)).entries());
    rec.check("torsion_free", rel(lhs_t.entries(), bracket.entries()), kTolFd);

    // Lift identity at two lifts of the same point: the projected Euclidean
    // derivative is the connection, independent of the fiber point.
    const Matrix o = random_orthogonal(rng, n);
    const Matrix root = spd_pow(a, 0.5);
    const auto lifted_of = [&](const VectorField& f, const Matrix& at) {
        const SPDMatrix base(at.transpose() * at);
        return Matrix(at * gamma(base, f.evaluate(base)).value.entries());
    };
    for (const Matrix& lift_mat : {root, Matrix(o * root)}) {
        const LiftMatrix l(lift_mat);
        const Matrix lift_x = horizontal_lift(l, x);
        const double hh = std::sqrt(std::numeric_limits<double>::epsilon()) *
                          (1.0 + lift_mat.norm()) / (1.0 + lift_x.norm());
        const Matrix euclid_d = (lifted_of(y_field, lift_mat + hh * lift_x) -
                                 lifted_of(y_field, lift_mat - hh * lift_x)) /
                                (2.0 * hh);
        rec.check("euclidean_connection_lifts",
                  rel(dsigma(l, euclid_d).entries(), nabla_xy.entries()), kTolFd);

        // Bracket relation [X~, Y~] = lift([X, Y]) + 2 T(X, Y); X is a
        // constant field, so [X, Y] = dY(X).
        const SymmetricTangent bracket_xy = y_field.differential(a, x);
        const Matrix lift_y = horizontal_lift(l, y_field.evaluate(a));
        const double hy = std::sqrt(std::numeric_limits<double>::epsilon()) *
                          (1.0 + lift_mat.norm()) / (1.0 + lift_y.norm());
        const Matrix d_x_of_y = (lifted_of(y_field, lift_mat + hh * lift_x) -
                                 lifted_of(y_field, lift_mat - hh * lift_x)) /
                                (2.0 * hh);
        const Matrix d_y_of_x = (lifted_of(x_field, lift_mat + hy * lift_y) -
                                 lifted_of(x_field, lift_mat - hy * lift_y)) /
                                (2.0 * hy);
        const Matrix lie = d_x_of_y - d_y_of_x;
        const Matrix expected = horizontal_lift(l, bracket_xy) +
                                2.0 * tensor_T(l, x, y_field.evaluate(a));
        rec.check("bracket_relation", rel(lie, expected), kTolFd);

        const Matrix t = tensor_T(l, x, y_field.evaluate(a));
        rec.check("tensor_vertical",
                  dsigma(l, t).entries().norm() / (1.0 + t.norm()), tol);
        rec.check("tensor_antisymmetric",
                  (tensor_T(l, y_field.evaluate(a), x) + t).norm() / (1.0 + t.norm()),
                  tol);
        rec.check("tensor_diagonal_zero",
                  tensor_T(l, x, x).norm() / (1.0 + x.entries().norm()), tol);
    }
}

void jacobi_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const SPDMatrix a = random_spd_draw(rng, n);
    const SymmetricTangent x = random_tangent(rng, n);
    SymmetricTangent y = random_tangent(rng, n);
    JacobiSpec spec(a, x, y);
    const double seed_norm = norm(a, spec.seed_derivative());
    if (seed_norm > 1e-8) {
        spec = JacobiSpec(a, x, scale(spec.seed_derivative(), 1.0 / seed_norm));
    }

    rec.check("seed_is_normal",
              std::abs(inner(a, spec.velocity(), spec.seed_derivative())), tol);
    rec.check("starts_at_zero", jacobi_field(spec, 0.0).entries().norm(), 0.0);

    const double t_cap = 0.99 * spec.t_max().clamp(10.0);
    for (int i = 1; i <= 9; ++i) {
        const double t = 0.1 * i * t_cap;
        rec.check("matches_variation_oracle",
                  rel(jacobi_field(spec, t).entries(),
                      variation_oracle(spec, t, 1e-4).entries()),
                  kTolJacobi);
    }

    // Initial condition D_t J(0) = Y through the along-curve connection.
    // The field is evaluated by its polynomial form, which extends to the
    // small negative parameters the central difference needs.
    const Extension eps_neg = max_extension(a, scale(x, -1.0));
    const double fd_h = std::min({1e-4, 0.25 * spec.t_max().clamp(1.0),
                                  0.25 * eps_neg.clamp(1.0)});
    const Matrix gx = gamma(a, spec.velocity()).value.entries();
    const Matrix gy = gamma(a, spec.seed_derivative()).value.entries();
    const Matrix quadratic =
        gx * a.entries() * gy + gy * a.entries() * gx;
    const auto curve = [&](double s) { return exp_map(a, scale(x, s)); };
    const auto field = [&](double s) {
        return SymmetricTangent(s * spec.seed_derivative().entries() +
                                s * s * quadratic);
    };
    const SymmetricTangent d0 =
        covariant_derivative_of_field_along(curve, field, 0.0, fd_h);
    rec.check("initial_derivative", rel(d0.entries(), spec.seed_derivative().entries()),
              kTolFd);

    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) {
        grid.push_back(t_cap * i / 50.0);
    }
    rec.check("no_conjugate_witness",
              min_jacobi_norm(spec, grid) > kTolWitness ? 0.0 : 1.0, 0.0);

    const SymmetricTangent y2 = random_tangent(rng, n);
    const JacobiSpec spec_y2(a, x, y2);
    const JacobiSpec spec_sum(a, x, SymmetricTangent(y.entries() + y2.entries()));
    const JacobiSpec spec_y(a, x, y);
    const double t_lin = 0.5 * t_cap;
    rec.check("linear_in_seed",
              rel(jacobi_field(spec_sum, t_lin).entries(),
                  jacobi_field(spec_y, t_lin).entries() +
                      jacobi_field(spec_y2, t_lin).entries()),
              1e-10);
}

void curvature_trial(int n, Rng& rng, TrialRecorder& rec) {
    const double tol = 1e-9;
    const SPDMatrix a = random_spd_draw(rng, n);
    SymmetricTangent x = random_tangent(rng, n);
    SymmetricTangent y = random_tangent(rng, n);
    x = scale(x, 1.0 / norm(a, x));
    y = scale(y, 1.0 / norm(a, y));

    const double r = curvature_value(a, x, y);
    const LiftMatrix root(spd_pow(a, 0.5));
    const double t_norm2 = tensor_T(root, x, y).squaredNorm();
    rec.check("equals_three_t_norm", rel(r, 3.0 * t_norm2), tol);
    rec.check("non_negative", std::max(0.0, -r), 1e-12);
    rec.check("antisymmetric_slot", std::abs(curvature_value(a, x, x)), tol);

    const double k_sec = sectional(a, x, y);
    for (double k : {0.1, 2.0, 10.0}) {
        rec.check("inverse_ratio_law",
                  rel(k * sectional(SPDMatrix(k * a.entries()), x, y), k_sec), tol);
    }

    const Matrix o = random_orthogonal(rng, n);
    rec.check("sectional_orthogonal_invariant",
              rel(sectional(act(o, a), act_tangent(o, x), act_tangent(o, y)), k_sec),
              tol);
    rec.check("scalar_orthogonal_invariant",
              rel(scalar_curvature(act(o, a)), scalar_curvature(a)), tol);

    // Closed basis form against the general trace form on a diagonal point.
    std::vector<double> lambdas(n);
    for (double& v : lambdas) {
        v = rng.uniform(0.2, 5.0);
    }
    std::sort(lambdas.begin(), lambdas.end());
    Matrix diag = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        diag(i, i) = lambdas[i];
    }
    const SPDMatrix lambda_point(diag);
    std::vector<BasisIndex> basis;
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            basis.emplace_back(p, q);
        }
    }
    const double lam_min = lambdas.front();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const double closed = sectional_basis(lambdas, basis[i], basis[j]);
            const double general =
                sectional(lambda_point, basis_tangent(n, basis[i]),
                          basis_tangent(n, basis[j]));
            rec.check("basis_matches_general", rel(closed, general), kTolBasis);
            rec.check("basis_in_bounds",
                      (closed >= 0.0 && closed < 3.0 / lam_min) ? 0.0 : 1.0, 0.0);
        }
    }

    rec.check("scalar_two_routes",
              rel(scalar_curvature(lambda_point), scalar_sum_oracle(lambdas)), tol);

    const CurvatureReport report = curvature_report(a);
    rec.check("report_scalar_consistent",
              rel(report.scalar_curvature, scalar_curvature(a)), tol);
    rec.check("report_radius_consistent", rel(report.radius, radius(a)), tol);
    rec.check("report_bound",
              (report.max_basis_sectional >= 0.0 &&
               report.max_basis_sectional < 3.0 / report.eigenvalues(0))
                  ? 0.0
                  : 1.0,
              0.0);
}

}  // namespace

SuiteResult run_trials(const std::string& name, const SuiteConfig& cfg,
                       const TrialFn& trial) {
    if (cfg.dims.empty() || cfg.trials < 1) {
        throw ValidationError("run_trials: need at least one dimension and one trial");
    }
    struct Outcome {
        double max_residual = 0.0;
        std::string failed;
    };
    std::vector<Outcome> outcomes(cfg.trials);

#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
    for (int t = 0; t < cfg.trials; ++t) {
        const int n = cfg.dims[t % cfg.dims.size()];
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        TrialRecorder rec;
        try {
            trial(n, rng, rec);
        } catch (const std::exception& e) {
            rec.fail(std::string("exception: ") + e.what());
        }
        outcomes[t].max_residual = rec.max_residual();
        outcomes[t].failed = rec.failed_property();
    }

    SuiteResult result;
    result.name = name;
    for (int t = 0; t < cfg.trials; ++t) {
        result.max_residual = std::max(result.max_residual, outcomes[t].max_residual);
        if (result.passed && !outcomes[t].failed.empty()) {
            result.passed = false;
            result.failed_trial = t;
            result.failed_property = outcomes[t].failed;
        }
    }
    return result;
}

SuiteResult run_matcore_suite(const SuiteConfig& cfg) {
    return run_trials("matcore", cfg, matcore_trial);
}
SuiteResult run_sylvester_suite(const SuiteConfig& cfg) {
    return run_trials("sylvester", cfg, sylvester_trial);
}
SuiteResult run_submersion_suite(const SuiteConfig& cfg) {
    return run_trials("submersion", cfg, submersion_trial);
}
SuiteResult run_geodesy_suite(const SuiteConfig& cfg) {
    return run_trials("geodesy", cfg, geodesy_trial);
}
SuiteResult run_radius_suite(const SuiteConfig& cfg) {
    return run_trials("radius", cfg, radius_trial);
}
SuiteResult run_connection_suite(const SuiteConfig& cfg) {
    return run_trials("connection", cfg, connection_trial);
}
SuiteResult run_jacobi_suite(const SuiteConfig& cfg) {
    return run_trials("jacobi", cfg, jacobi_trial);
}
SuiteResult run_curvature_suite(const SuiteConfig& cfg) {
    return run_trials("curvature", cfg, curvature_trial);
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
    return {run_matcore_suite(cfg),    run_sylvester_suite(cfg),
            run_submersion_suite(cfg), run_geodesy_suite(cfg),
            run_radius_suite(cfg),     run_connection_suite(cfg),
            run_jacobi_suite(cfg),     run_curvature_suite(cfg)};
}

std::string format_report(const std::vector<SuiteResult>& results) {
    std::string out;
    for (const auto& r : results) {
        char residual[64];
        const auto [ptr, ec] =
            std::to_chars(residual, residual + sizeof(residual), r.max_residual);
        std::string line = r.name;
        line.append(line.size() < 11 ? 11 - line.size() : 1, ' ');
        line += r.passed ? "pass" : "FAIL";
        line += " max_residual=";
        line.append(residual, ptr);
        if (!r.passed) {
            line += " failed=" + r.failed_property +
                    " trial=" + std::to_string(r.failed_trial);
        }
        line += '\n';
        out += line;
    }
    return out;
}

}  // namespace bures::checks
