#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <evosr/linalg.hpp>

using namespace evosr;

TEST_CASE("DenseMatrix construction and access") {
    DenseMatrix m(2, 3);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    REQUIRE_FALSE(m.square());
    m(1, 2) = 4.5;
    REQUIRE(m(1, 2) == 4.5);
    REQUIRE(m(0, 0) == 0.0);

    const DenseMatrix id = DenseMatrix::identity(3);
    REQUIRE(id.square());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(id(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("DenseMatrix rejects degenerate shapes and non-finite data") {
    REQUIRE_THROWS_AS(DenseMatrix(0, 2), dimension_error);
    REQUIRE_THROWS_AS(DenseMatrix(2, 0), dimension_error);
    REQUIRE_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), dimension_error);
    REQUIRE_THROWS_AS(
        DenseMatrix(1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}),
        invalid_value_error);
}

TEST_CASE("LinearSystem validates shape and diagonal") {
    DenseMatrix a(2, 2, {2.0, 1.0, 1.0, 2.0});
    REQUIRE_NOTHROW(LinearSystem(a, {3.0, 3.0}));
    REQUIRE_THROWS_AS(LinearSystem(a, {3.0}), dimension_error);
    REQUIRE_THROWS_AS(LinearSystem(DenseMatrix(2, 3), {1.0, 1.0}), dimension_error);

    DenseMatrix z(2, 2, {0.0, 1.0, 1.0, 2.0});
    REQUIRE_THROWS_AS(LinearSystem(z, {1.0, 1.0}), singular_diagonal_error);

    const LinearSystem sys(a, {3.0, 3.0}, "toy", 7);
    REQUIRE(sys.order() == 2);
    REQUIRE(sys.label == "toy");
    REQUIRE(sys.seed.has_value());
    REQUIRE(*sys.seed == 7);
}

TEST_CASE("dlu_split partitions the matrix bitwise") {
    DenseMatrix a(3, 3, {4.0, -1.0, 2.0, 0.5, 5.0, -3.0, 1.0, 1.5, 6.0});
    const DluSplit s = dlu_split(a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            REQUIRE(s.d(i, j) == (i == j ? a(i, j) : 0.0));
            REQUIRE(s.l(i, j) == (i > j ? a(i, j) : 0.0));
            REQUIRE(s.u(i, j) == (i < j ? a(i, j) : 0.0));
            REQUIRE(s.d(i, j) + s.l(i, j) + s.u(i, j) == a(i, j));
        }
}

TEST_CASE("matvec and residual on a hand example") {
    DenseMatrix a(2, 2, {2.0, 1.0, 1.0, 2.0});
    const LinearSystem sys(a, {3.0, 3.0});
    const RealVector x{1.0, 1.0};
    const RealVector ax = matvec(a, x);
    REQUIRE(ax[0] == 3.0);
    REQUIRE(ax[1] == 3.0);
    const RealVector r = residual(sys, x);
    REQUIRE(r[0] == 0.0);
    REQUIRE(r[1] == 0.0);

    // residual is Ax - b; only its norm feeds the solvers.
    const RealVector r0 = residual(sys, {0.0, 0.0});
    REQUIRE(r0[0] == -3.0);
    REQUIRE(r0[1] == -3.0);
}

TEST_CASE("row_dot uses fixed left-to-right accumulation") {
    // Summation order matters in floating point; pin the exact result.
    DenseMatrix a(1, 3, {1e16, 1.0, -1e16});
    const double d = row_dot(a, 0, {1.0, 1.0, 1.0});
    REQUIRE(d == ((1e16 + 1.0) - 1e16));  // == 0.0 with left-to-right order
    REQUIRE(d == 0.0);
}

TEST_CASE("vector norms") {
    const RealVector v{3.0, -4.0, 0.0};
    REQUIRE(vec_norm(v, NormKind::euclidean) == 5.0);
    REQUIRE(vec_norm(v, NormKind::infinity) == 4.0);
    REQUIRE(vec_norm(v, NormKind::one) == 7.0);
    REQUIRE(vec_norm({}, NormKind::euclidean) == 0.0);
}

TEST_CASE("error_norm is the residual norm") {
    DenseMatrix a(2, 2, {2.0, 1.0, 1.0, 2.0});
    const LinearSystem sys(a, {3.0, 3.0});
    REQUIRE(error_norm(sys, {0.0, 0.0}) == Catch::Approx(std::sqrt(18.0)));
    REQUIRE(error_norm(sys, {0.0, 0.0}, NormKind::infinity) == 3.0);
    REQUIRE(error_norm(sys, {1.0, 1.0}) == 0.0);
}

TEST_CASE("matrix infinity norm") {
    DenseMatrix m(2, 2, {1.0, -2.0, 0.5, 0.25});
    REQUIRE(mat_inf_norm(m) == 3.0);
}
