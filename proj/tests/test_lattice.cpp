#include "helpers.hpp"

#include "torifan/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace torifan;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == oracle::cofactor_det(oracle::to_mat(m)));
    }
}

TEST_CASE("determinant handles zero pivots and rejects non-square input") {
    IntMatrix m(3, 3);
    m << 0, 1, 2,
         1, 0, 3,
         4, -3, 8;
    CHECK(determinant(m) == -2);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("adjugate times matrix is det times identity") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = random_matrix(rng, 4, 4);
        const IntMatrix prod = adjugate(m) * m;
        const Integer det = determinant(m);
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j)
                CHECK(prod(i, j) == (i == j ? det : Integer(0)));
    }
}

TEST_CASE("unimodular matrices") {
    IntMatrix m(2, 2);
    m << 2, 1,
         1, 1;
    const UniMatrix u(m);
    CHECK(u.det() == 1);
    const IntMatrix prod = u.matrix() * u.inverse().matrix();
    CHECK(prod == IntMatrix::Identity(2, 2));

    IntMatrix bad(2, 2);
    bad << 2, 0,
           0, 1;
    CHECK_THROWS_AS(UniMatrix{bad}, std::invalid_argument);
    CHECK_THROWS_AS(UniMatrix{IntMatrix(2, 3)}, std::invalid_argument);
}

TEST_CASE("smith normal form matches determinantal divisors") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 1 + trial % 4;
        const int cols = 1 + (trial / 4) % 4;
        const IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
        const SmithDecomposition snf = smith_normal_form(m);

        const IntMatrix reconstructed = snf.left.matrix() * m * snf.right.matrix();
        CHECK(reconstructed == snf.diagonal);
        for (Index i = 0; i < snf.diagonal.rows(); ++i)
            for (Index j = 0; j < snf.diagonal.cols(); ++j)
                if (i != j)
                    CHECK(snf.diagonal(i, j) == 0);

        const auto factors = snf.invariant_factors();
        const auto expected = oracle::invariant_factors(oracle::to_mat(m));
        REQUIRE(factors.size() == expected.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
            CHECK(factors[k] == expected[k]);
            if (k + 1 < factors.size() && factors[k] != 0)
                CHECK(factors[k + 1] % factors[k] == 0);
        }
        CHECK(snf.rank() == rank(m));
    }
}

TEST_CASE("integer kernel is saturated") {
    IntMatrix m(1, 2);
    m << 2, 4;
    const IntMatrix k = integer_kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(content(LatticeVector(k.col(0))) == 1);
    CHECK((m * k).isZero());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix a = random_matrix(rng, 2, 5, -3, 3);
        const IntMatrix ker = integer_kernel(a);
        CHECK(ker.cols() == 5 - rank(a));
        CHECK((a * ker).isZero());
        // A saturated lattice basis has trivial invariant factors.
        if (ker.cols() > 0)
            for (const Integer& f : smith_normal_form(ker).invariant_factors())
                CHECK(f == 1);
    }
}

TEST_CASE("content and primitivity") {
    CHECK(content(lattice_vector({4, -6, 10})) == 2);
    CHECK(content(lattice_vector({0, 0})) == 0);
    CHECK(is_primitive(lattice_vector({2, 3})));
    CHECK_FALSE(is_primitive(lattice_vector({2, 4})));
    CHECK_THROWS(is_primitive(lattice_vector({0, 0})));
    CHECK(equal(primitive_part(lattice_vector({-4, 6})), lattice_vector({-2, 3})));
    CHECK_THROWS(primitive_part(lattice_vector({0})));
}

TEST_CASE("rational and nonnegative integer solves") {
    IntMatrix basis(3, 2);
    basis << 1, 0,
             0, 1,
             1, 1;
    auto x = solve_rational(basis.cast<Rational>(), lattice_vector({2, 3, 5}).cast<Rational>());
    REQUIRE(x);
    CHECK((*x)(0) == 2);
    CHECK((*x)(1) == 3);
    CHECK_FALSE(solve_rational(basis.cast<Rational>(), lattice_vector({1, 1, 1}).cast<Rational>()));

    IntMatrix dependent(2, 2);
    dependent << 1, 2,
                 2, 4;
    CHECK_THROWS_AS(solve_rational(dependent.cast<Rational>(),
                                   lattice_vector({1, 2}).cast<Rational>()),
                    std::invalid_argument);

    CHECK(solve_nonneg_integer(basis, lattice_vector({2, 3, 5})));
    CHECK_FALSE(solve_nonneg_integer(basis, lattice_vector({-1, 3, 2})));

    IntMatrix doubled(2, 1);
    doubled << 2, 0;
    CHECK_FALSE(solve_nonneg_integer(doubled, lattice_vector({1, 0})));
}

TEST_CASE("to_integer rejects fractions") {
    CHECK(to_integer(Rational(6, 3)) == 2);
    CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::domain_error);
}

}
