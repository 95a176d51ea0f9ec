#include <doctest.h>

#include <random>

#include "lieclass/errors.hpp"
#include "lieclass/mat2.hpp"
#include "testutil.hpp"

using namespace lieclass;

TEST_CASE("commutator fixtures") {
    // the worked pair of the reduction analysis
    Mat2 A(0, 1, 1, 0);
    Mat2 B(0, 1, 0, 0);
    CHECK(commutator(A, B) == Mat2(-1, 0, 0, 1));

    // identity commutes with everything
    CHECK(commutator(Mat2::identity(), B).is_zero());

    // direct multiplication: diag(0,4) against [[4,1],[0,0]]
    CHECK(commutator(Mat2::diag(0, 4), Mat2(4, 1, 0, 0)) == Mat2(0, -4, 0, 0));
}

TEST_CASE("commutator is bilinear and alternating") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2 A = testutil::rand_mat2(gen);
        Mat2 B = testutil::rand_mat2(gen);
        Mat2 C = testutil::rand_mat2(gen);
        Scalar c = testutil::rand_rational(gen);
        CHECK(commutator(A, A).is_zero());
        CHECK(commutator(A + B, C) == commutator(A, C) + commutator(B, C));
        CHECK(commutator(c * A, B) == c * commutator(A, B));
        CHECK(commutator(A, B) == -commutator(B, A));
    }
}

TEST_CASE("inverse and determinant") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2 m = testutil::rand_nonsingular(gen);
        CHECK(m * m.inverse() == Mat2::identity());
        CHECK(m.inverse() * m == Mat2::identity());
    }
    Mat2 singular(1, 2, 2, 4);
    CHECK_THROWS_AS(singular.inverse(), Error);
    CHECK(Mat2(2, 0, 0, 3).det() == Scalar(6));
    CHECK(Mat2(2, 0, 0, 3).trace() == Scalar(5));
}

TEST_CASE("matrices over the extension field") {
    Scalar r2 = Scalar::sqrt_of(Scalar(2));
    Mat2 m(Scalar(1), r2, -r2, Scalar(1));
    CHECK(m.det() == Scalar(3)); // 1 + 2
    CHECK(m * m.inverse() == Mat2::identity());
}
