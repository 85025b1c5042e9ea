#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "burnside/matrix.hpp"
#include "helpers.hpp"

using burnside::RatMatrix;
using burnside::Rational;
using testutil::mat;

namespace {
const RatMatrix kHomEpi2 = mat({{1, 0}, {1, 2}});
const RatMatrix kHomEpi3 = mat({{1, 0, 0}, {1, 2, 0}, {1, 6, 6}});
const RatMatrix kHomEpi4 = mat({{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 6, 6, 0}, {1, 14, 36, 24}});
const RatMatrix kHomC6 = mat({{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 0, 3, 0}, {1, 2, 3, 6}});
}  // namespace

TEST_CASE("identity is neutral for multiplication") {
    RatMatrix x = mat({{Rational(1, 2), 3}, {-5, Rational(7, 3)}});
    CHECK(mat_mul(RatMatrix::identity(2), x) == x);
    CHECK(mat_mul(x, RatMatrix::identity(2)) == x);
}

TEST_CASE("E*A*M reassembles the three-object hom matrix") {
    RatMatrix e = mat({{1, 0, 0}, {1, 1, 0}, {1, 3, 1}});
    RatMatrix a = mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 6}});
    RatMatrix m = RatMatrix::identity(3);
    CHECK(mat_mul(mat_mul(e, a), m) == kHomEpi3);
}

TEST_CASE("multiplication dimension mismatch is rejected") {
    CHECK_THROWS_AS(mat_mul(RatMatrix(2, 3), RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("random inverses multiply back to the identity") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = testutil::random_nonsingular(rng, 4);
        auto inv = mat_inverse(a);
        CHECK(mat_mul(a, inv) == RatMatrix::identity(4));
        CHECK(mat_mul(inv, a) == RatMatrix::identity(4));
    }
}

TEST_CASE("determinants of the hom matrices") {
    CHECK(mat_det(kHomEpi3) == Rational(12));
    CHECK(mat_det(RatMatrix::identity(5)) == Rational(1));

    // five-object case, diagonal k!: value recomputed from the factorials
    RatMatrix h5(5, 5);
    long surj5[5][5] = {{1, 0, 0, 0, 0},
                        {1, 2, 0, 0, 0},
                        {1, 6, 6, 0, 0},
                        {1, 14, 36, 24, 0},
                        {1, 30, 150, 240, 120}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) h5(i, j) = Rational(surj5[i][j]);
    Rational expected(1);
    for (long k = 1; k <= 5; ++k) {
        Rational kfact(1);
        for (long t = 2; t <= k; ++t) kfact *= Rational(t);
        expected *= kfact;
    }
    CHECK(expected == Rational(34560));
    CHECK(mat_det(h5) == expected);
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_AS(mat_det(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("exact inverses") {
    CHECK(mat_inverse(kHomEpi2) == mat({{1, 0}, {Rational(-1, 2), Rational(1, 2)}}));
    CHECK(mat_inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));

    auto inv4 = mat_inverse(kHomEpi4);
    CHECK(inv4(3, 0) == Rational(-1, 4));
    CHECK(inv4(3, 1) == Rational(11, 24));
    CHECK(inv4(3, 2) == Rational(-1, 4));
    CHECK(inv4(3, 3) == Rational(1, 24));
}

TEST_CASE("singular matrices are detected exactly") {
    RatMatrix s = mat({{1, 2}, {2, 4}});
    CHECK(mat_det(s) == Rational(0));
    CHECK_THROWS_AS(mat_inverse(s), std::domain_error);
    CHECK_THROWS_AS(mat_solve(s, {Rational(1), Rational(1)}), std::domain_error);
}

TEST_CASE("linear solve") {
    std::vector<Rational> v{Rational(3), Rational(-1, 2), Rational(7)};
    CHECK(mat_solve(RatMatrix::identity(3), v) == v);

    // two-object hom matrix: unit of the ring is the first basis object
    auto x = mat_solve(kHomEpi2, {Rational(1), Rational(1)});
    CHECK(x == std::vector<Rational>{Rational(1), Rational(0)});

    // solving H*x = e4 picks out the last column of the inverse
    auto col = mat_solve(kHomC6, {Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(col == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1, 6)});

    // the transposed system yields the last row of the inverse instead
    auto row = mat_solve(transpose(kHomC6), {Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(row == std::vector<Rational>{Rational(1, 6), Rational(-1, 6), Rational(-1, 6), Rational(1, 6)});
    auto inv = mat_inverse(kHomC6);
    for (int j = 0; j < 4; ++j) CHECK(inv(3, j) == row[j]);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testutil::random_matrix(rng, 3);
        auto b = testutil::random_matrix(rng, 3);
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
    }
}

TEST_CASE("triangular determinant is the product of the diagonal") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix t(4, 4);
        Rational prod(1);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j <= i; ++j) t(i, j) = Rational(entry(rng));
            prod *= t(i, i);
        }
        CHECK(mat_det(t) == prod);
    }
}

TEST_CASE("nullspace of a rank-deficient matrix") {
    RatMatrix a = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    auto basis = nullspace_basis(a);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});

    RatMatrix b = mat({{1, 2, 3}, {2, 4, 6}});
    auto nb = nullspace_basis(b);
    REQUIRE(nb.size() == 2);
    for (const auto& x : nb) {
        auto y = mat_apply(b, x);
        for (const auto& e : y) CHECK(e.is_zero());
    }
    CHECK(nullspace_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("empty matrix degenerate cases") {
    RatMatrix z(0, 0);
    CHECK(mat_det(z) == Rational(1));
    CHECK(mat_inverse(z) == z);
    CHECK(mat_solve(z, {}).empty());
    CHECK(mat_mul(z, z) == z);
}
