#include <doctest.h>

#include "bures/checks/oracles.hpp"
#include "bures/matrix.hpp"
#include "bures/rng.hpp"
#include "helpers.hpp"

using namespace bures;

TEST_CASE("symmetrize averages the matrix with its transpose") {
    const SymmetricTangent s = symmetrize(test::mat2(1, 2, 0, 1));
    CHECK(s.entries() == test::mat2(1, 1, 1, 1));

    const Matrix sym = test::mat2(2, 3, 3, 5);
    CHECK(symmetrize(sym).entries() == sym);

    CHECK(symmetrize(test::mat2(0, 4, -4, 0)).entries() == Matrix::Zero(2, 2));

    CHECK_THROWS_AS(symmetrize(Matrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("eig_sym orders eigenvalues ascending with oriented eigenvectors") {
    const Spectrum spec = eig_sym(test::diag({3, 1}));
    CHECK(spec.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spec.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
    // Permutation columns with the dominant entry positive.
    CHECK(spec.eigenvectors(1, 0) == doctest::Approx(1.0));
    CHECK(spec.eigenvectors(0, 1) == doctest::Approx(1.0));

    const Spectrum pair = eig_sym(test::mat2(2, 1, 1, 2));
    CHECK(pair.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pair.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));

    const Spectrum id = eig_sym(Matrix::Identity(4, 4));
    for (int i = 0; i < 4; ++i) {
        CHECK(id.eigenvalues(i) == doctest::Approx(1.0).epsilon(1e-14));
    }

    // Deterministic for a fixed input.
    Rng rng(11);
    const Matrix s = checks::random_tangent(rng, 5).entries();
    const Spectrum once = eig_sym(s);
    const Spectrum twice = eig_sym(s);
    CHECK(once.eigenvectors == twice.eigenvectors);
}

TEST_CASE("SPDMatrix rejects indefinite and accepts scaled-down spectra") {
    CHECK_THROWS_AS(SPDMatrix(test::diag({1, -1})), NotSpdError);
    CHECK_THROWS_AS(SPDMatrix(test::diag({0, 1})), NotSpdError);
    // The gate is relative, so uniform scaling cannot fail it.
    CHECK_NOTHROW(SPDMatrix(1e-30 * Matrix::Identity(3, 3)));
    CHECK_THROWS_AS(SPDMatrix(test::diag({1e-14, 1.0})), NotSpdError);
}

TEST_CASE("sqrt_spd on diagonal and random inputs") {
    CHECK(sqrt_spd(SPDMatrix(Matrix::Identity(3, 3))).entries() ==
          Matrix::Identity(3, 3));
    CHECK(rel_diff(sqrt_spd(test::spd_diag({4, 9})).entries(), test::diag({2, 3})) <
          1e-14);

    for (int n = 1; n <= 10; ++n) {
        const SPDMatrix a = random_spd(n, 100 + n);
        const Matrix root = sqrt_spd(a).entries();
        CHECK(rel_diff(root * root, a.entries()) < 1e-10);
    }
}

TEST_CASE("sqrt_product of the non-symmetric product") {
    const SPDMatrix a2 = random_spd(4, 7);
    CHECK(rel_diff(sqrt_product(SPDMatrix(Matrix::Identity(4, 4)), a2),
                   sqrt_spd(a2).entries()) < 1e-12);

    CHECK(rel_diff(sqrt_product(test::spd_diag({1, 4}), test::spd_diag({4, 1})),
                   test::diag({2, 2})) < 1e-12);

    const SPDMatrix a = random_spd(5, 8);
    const SPDMatrix b = random_spd(5, 9);
    const Matrix root = sqrt_product(a, b);
    CHECK(rel_diff(root * root, a.entries() * b.entries()) < 1e-9);
    CHECK(rel_diff(sqrt_product(a, a), a.entries()) < 1e-10);

    CHECK_THROWS_AS(sqrt_product(random_spd(2, 1), random_spd(3, 1)), DimensionError);
}

TEST_CASE("random_spd is reproducible and valid") {
    const SPDMatrix a = random_spd(6, 42);
    const SPDMatrix b = random_spd(6, 42);
    CHECK(a.entries() == b.entries());
    CHECK(random_spd(6, 43).entries() != a.entries());

    const SPDMatrix scalar = random_spd(1, 5);
    CHECK(scalar.entries()(0, 0) > 0.0);

    CHECK_THROWS_AS(random_spd(0, 1), DimensionError);
}
