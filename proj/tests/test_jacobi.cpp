#include <doctest.h>

#include <vector>

#include "bures/checks/oracles.hpp"
#include "bures/jacobi.hpp"
#include "bures/rng.hpp"
#include "helpers.hpp"

using namespace bures;

TEST_CASE("jacobi field closed form at the identity") {
    Rng rng(1);
    const SPDMatrix id(Matrix::Identity(3, 3));
    const SymmetricTangent x = checks::random_tangent(rng, 3);
    const SymmetricTangent y = checks::random_tangent(rng, 3);
    const JacobiSpec spec(id, x, y);

    CHECK(jacobi_field(spec, 0.0).entries().norm() == 0.0);
    CHECK(inner(id, spec.velocity(), spec.seed_derivative()) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // J(t) = tY + t^2 (XY + YX)/4 at the identity (with the projected seed)
    const Matrix yn = spec.seed_derivative().entries();
    const double t = 0.4;
    const Matrix expected =
        t * yn + 0.25 * t * t * (x.entries() * yn + yn * x.entries());
    CHECK(rel_diff(jacobi_field(spec, t).entries(), expected) < 1e-12);
}

TEST_CASE("variation oracle agrees with the closed form") {
    Rng rng(2);
    for (int n : {2, 4, 6}) {
        const SPDMatrix a = checks::random_spd_draw(rng, n);
        const SymmetricTangent x = checks::random_tangent(rng, n);
        const SymmetricTangent y = checks::random_tangent(rng, n);
        const JacobiSpec spec(a, x, y);
        const double t_cap = 0.9 * spec.t_max().clamp(10.0);
        for (double frac : {0.2, 0.5, 0.9}) {
            const double t = frac * t_cap;
            CHECK(rel_diff(variation_oracle(spec, t, 1e-4).entries(),
                           jacobi_field(spec, t).entries()) < 1e-5);
        }
    }
}

TEST_CASE("variation oracle at degenerate parameters") {
    Rng rng(3);
    const SPDMatrix a = checks::random_spd_draw(rng, 3);
    const SymmetricTangent x = checks::random_tangent(rng, 3);
    const JacobiSpec zero_seed(a, x, SymmetricTangent(Matrix::Zero(3, 3)));
    CHECK(variation_oracle(zero_seed, 0.5, 1e-4).entries().norm() < 1e-12);

    const JacobiSpec spec(a, x, checks::random_tangent(rng, 3));
    CHECK(variation_oracle(spec, 0.0, 1e-4).entries().norm() < 1e-12);
}

TEST_CASE("central-difference error of the variation stays O(h^2)-bounded") {
    // The variation is quadratic in the parameter, so the truncation term
    // vanishes; what remains is round-off well under any C h^2 envelope.
    Rng rng(4);
    const SPDMatrix a = checks::random_spd_draw(rng, 4);
    const JacobiSpec spec(a, checks::random_tangent(rng, 4),
                          checks::random_tangent(rng, 4));
    const double t = 0.5 * spec.t_max().clamp(2.0);
    const Matrix closed = jacobi_field(spec, t).entries();
    for (double h : {1e-2, 1e-3, 1e-4}) {
        const double err = rel_diff(variation_oracle(spec, t, h).entries(), closed);
        CHECK(err <= 0.1 * h * h);
    }
}

TEST_CASE("min jacobi norm witnesses no conjugate points") {
    Rng rng(5);
    const SPDMatrix a = checks::random_spd_draw(rng, 4);
    const SymmetricTangent x = checks::random_tangent(rng, 4);
    SymmetricTangent y = checks::random_tangent(rng, 4);
    JacobiSpec spec(a, x, y);
    const double seed_norm = norm(a, spec.seed_derivative());
    spec = JacobiSpec(a, x, SymmetricTangent(spec.seed_derivative().entries() / seed_norm));

    std::vector<double> grid;
    const double cap = 0.99 * spec.t_max().clamp(10.0);
    for (int i = 1; i <= 50; ++i) {
        grid.push_back(cap * i / 50.0);
    }
    CHECK(min_jacobi_norm(spec, grid) > 1e-8);

    // flat direction: A = I, X = 0 gives J(t) = tY with constant norm
    const SPDMatrix id(Matrix::Identity(3, 3));
    const SymmetricTangent zero(Matrix::Zero(3, 3));
    const SymmetricTangent seed = checks::random_tangent(rng, 3);
    const JacobiSpec flat(id, zero, seed);
    std::vector<double> small_grid{0.5, 1.0, 2.0};
    CHECK(min_jacobi_norm(flat, small_grid) ==
          doctest::Approx(norm(id, seed)).epsilon(1e-10));
}

TEST_CASE("jacobi field is linear in the seed") {
    Rng rng(6);
    const SPDMatrix a = checks::random_spd_draw(rng, 4);
    const SymmetricTangent x = checks::random_tangent(rng, 4);
    const SymmetricTangent y1 = checks::random_tangent(rng, 4);
    const SymmetricTangent y2 = checks::random_tangent(rng, 4);
    const JacobiSpec s1(a, x, y1);
    const JacobiSpec s2(a, x, y2);
    const JacobiSpec sum(a, x, SymmetricTangent(y1.entries() + y2.entries()));
    const double t = 0.4 * s1.t_max().clamp(2.0);
    CHECK(rel_diff(jacobi_field(sum, t).entries(),
                   jacobi_field(s1, t).entries() + jacobi_field(s2, t).entries()) <
          1e-10);
}

TEST_CASE("jacobi field respects the geodesic domain") {
    const SPDMatrix id(Matrix::Identity(2, 2));
    const SymmetricTangent minus(-Matrix::Identity(2, 2));
    Rng rng(7);
    const JacobiSpec spec(id, minus, checks::random_tangent(rng, 2));
    CHECK_NOTHROW(jacobi_field(spec, 1.9));
    CHECK_THROWS_AS(jacobi_field(spec, 2.0), BoundaryError);
    CHECK_THROWS_AS(jacobi_field(spec, -0.1), RangeError);
}
