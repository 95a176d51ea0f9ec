#include <doctest.h>

#include <cmath>
#include <random>

#include "lieclass/matexp.hpp"
#include "testutil.hpp"

using namespace lieclass;

TEST_CASE("exp of zero is the identity") {
    DMat2 e = mat_exp_numeric(Mat2::zero(), 3.7);
    CHECK(testutil::dmat_dist(e, DMat2::identity()) == 0.0);
}

TEST_CASE("involutive matrix: cosh/sinh form") {
    // A^2 = E gives e^(sA) = cosh(s) E + sinh(s) A; the worked example's
    // series confirms the formula (parenthesis typo and all).
    Mat2 A(0, 1, 1, 0);
    DMat2 e = mat_exp_numeric(A, 1.0);
    CHECK(e.m[0][0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(e.m[0][1] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    CHECK(e.m[1][0] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    CHECK(e.m[1][1] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));

    // independent series oracle agrees
    DMat2 oracle = testutil::taylor_exp(DMat2::from(A));
    CHECK(testutil::dmat_dist(e, oracle) < 1e-13);
}

TEST_CASE("diagonal case") {
    DMat2 e = mat_exp_numeric(Mat2::diag(1, 2), std::log(2.0));
    CHECK(e.m[0][0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(e.m[1][1] == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(std::abs(e.m[0][1]) < 1e-15);
    CHECK(std::abs(e.m[1][0]) < 1e-15);
}

TEST_CASE("agreement with the series oracle under ||tA|| <= 10") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 A = testutil::rand_mat2(gen, 3, 2);
        double t = testutil::rand_unit(gen) * 2.0;
        DMat2 M = DMat2::from(A);
        if ((std::abs(t) * M.max_abs()) > 10.0) continue;
        DMat2 mine = mat_exp_numeric(A, t);
        DMat2 oracle = testutil::taylor_exp(t * M);
        double scale = std::max(1.0, oracle.max_abs());
        CHECK(testutil::dmat_dist(mine, oracle) / scale < 1e-12);
    }
}

TEST_CASE("one-parameter group law") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 60; ++trial) {
        Mat2 A = testutil::rand_mat2(gen, 3, 2);
        double s = testutil::rand_unit(gen);
        double t = testutil::rand_unit(gen);
        DMat2 lhs = mat_exp_numeric(A, s) * mat_exp_numeric(A, t);
        DMat2 rhs = mat_exp_numeric(A, s + t);
        double scale = std::max(1.0, rhs.max_abs());
        CHECK(testutil::dmat_dist(lhs, rhs) / scale < 1e-10);
    }
}

TEST_CASE("near-degenerate delta uses the series branch") {
    // defective matrix: delta = 0 exactly
    Mat2 A(2, 1, 0, 2);
    DMat2 e = mat_exp_numeric(A, 1.0);
    // e^A = e^2 [[1, 1], [0, 1]]
    CHECK(e.m[0][0] == doctest::Approx(std::exp(2.0)).epsilon(1e-13));
    CHECK(e.m[0][1] == doctest::Approx(std::exp(2.0)).epsilon(1e-13));
    CHECK(e.m[1][0] == 0.0);
    // nearly defective: still matches the oracle
    DMat2 almost;
    almost.m[0][0] = 2.0 + 1e-8;
    almost.m[0][1] = 1.0;
    almost.m[1][0] = 0.0;
    almost.m[1][1] = 2.0;
    DMat2 mine = mat_exp_numeric(almost, 1.0);
    DMat2 oracle = testutil::taylor_exp(almost);
    CHECK(testutil::dmat_dist(mine, oracle) / oracle.max_abs() < 1e-12);
}
