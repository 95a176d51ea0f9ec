#include <doctest.h>

#include <random>

#include "lieclass/prolong.hpp"
#include "testutil.hpp"

using namespace lieclass;

TEST_CASE("translation and scaling are admitted by every system") {
    std::mt19937_64 gen(301);
    for (int trial = 0; trial < 60; ++trial) {
        Mat2 A = testutil::rand_mat2(gen);
        Mat2 B = testutil::rand_mat2(gen);
        CHECK(admittance_residual(A, B, vf_translation()).is_zero());
        CHECK(admittance_residual(A, B, vf_scaling()).is_zero());
    }
}

TEST_CASE("first extension generator on its class") {
    // A = diag(0, 4 lambda), B upper triangular with b11 = b22 + 4 lambda^2.
    // Checked by hand: with N = [[0,1],[0,0]] and M = e^(-2 lambda x) N,
    // 2M' = -4 lambda e^(-2 lambda x) N equals AM - MA, and
    // M'' = 4 lambda^2 e^(-2 lambda x) N equals BM - MB.
    for (long lam_num : {1L, -1L, 3L}) {
        Scalar lambda(lam_num, lam_num == -1 ? 2 : 1); // 1, -1/2, 3
        Scalar l2 = lambda * lambda;
        Mat2 A = Mat2::diag(Scalar(0), Scalar(4) * lambda);
        Mat2 B(Scalar(7, 3) + Scalar(4) * l2, Scalar(5), Scalar(0), Scalar(7, 3));
        VectorField x1 = vf_x1(lambda);

        // the two sides of the hand computation
        EPMat M = x1.M;
        EPMat lhs1 = ep_scale(ExpPoly(Scalar(2)), ep_derivative(M));
        EPMat rhs1 = ep_sub(ep_mul(ep_from(A), M), ep_mul(M, ep_from(A)));
        CHECK(lhs1 == rhs1);
        EPMat lhs2 = ep_derivative(ep_derivative(M));
        EPMat rhs2 = ep_sub(ep_mul(ep_from(B), M), ep_mul(M, ep_from(B)));
        CHECK(lhs2 == rhs2);

        CHECK(admittance_residual(A, B, x1).is_zero());
    }
}

TEST_CASE("residual of the first generator in closed form") {
    // For arbitrary B (same A) the residual collects to
    //   R1 = 0,  R2 = e^(-2 lambda x) [[b21, h2], [0, -b21]].
    std::mt19937_64 gen(307);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar lambda = testutil::rand_rational_nonzero(gen, 3, 2);
        Mat2 A = Mat2::diag(Scalar(0), Scalar(4) * lambda);
        Mat2 B = testutil::rand_mat2(gen, 4, 2);
        AdmittanceResidual res = admittance_residual(A, B, vf_x1(lambda));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(res.R1[i][j].is_zero());
        Scalar h2 = B(1, 1) - B(0, 0) + Scalar(4) * lambda * lambda;
        Scalar mu = Scalar(-2) * lambda;
        CHECK(res.R2[0][0] == ExpPoly::term(B(1, 0), 0, mu));
        CHECK(res.R2[0][1] == ExpPoly::term(h2, 0, mu));
        CHECK(res.R2[1][0].is_zero());
        CHECK(res.R2[1][1] == ExpPoly::term(-B(1, 0), 0, mu));
    }
}

TEST_CASE("residual of the second generator in closed form") {
    // R1 = 0, R2 = e^(-lambda x) [[lambda (4 b11 - lambda^2), 0],
    //                             [8 lambda b21, lambda (4 b22 + 15 lambda^2)]]
    std::mt19937_64 gen(311);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar lambda = testutil::rand_rational_nonzero(gen, 3, 2);
        Scalar l2 = lambda * lambda;
        Mat2 A = Mat2::diag(Scalar(0), Scalar(4) * lambda);
        Mat2 B = testutil::rand_mat2(gen, 4, 2);
        AdmittanceResidual res = admittance_residual(A, B, vf_x2(lambda));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(res.R1[i][j].is_zero());
        Scalar mu = -lambda;
        CHECK(res.R2[0][0] == ExpPoly::term(lambda * (Scalar(4) * B(0, 0) - l2), 0, mu));
        CHECK(res.R2[0][1].is_zero());
        CHECK(res.R2[1][0] == ExpPoly::term(Scalar(8) * lambda * B(1, 0), 0, mu));
        CHECK(res.R2[1][1] ==
              ExpPoly::term(lambda * (Scalar(4) * B(1, 1) + Scalar(15) * l2), 0, mu));
    }
}

TEST_CASE("perturbing b21 breaks the first generator") {
    Mat2 A = Mat2::diag(0, 4);
    Mat2 B(4, 1, 1, 0); // b21 = 1
    AdmittanceResidual res = admittance_residual(A, B, vf_x1(Scalar(1)));
    CHECK_FALSE(res.is_zero());
    // the broken block picks up a diagonal term of size b21 at x = 0
    CHECK(res.max_abs_at(0.0) >= 1.0);
}

TEST_CASE("internal basis element is admitted exactly on the C1 family") {
    std::mt19937_64 gen(313);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar lambda = testutil::rand_rational_nonzero(gen, 3, 2);
        Scalar b22 = testutil::rand_rational(gen, 3, 2);
        Scalar b12 = testutil::rand_rational(gen, 3, 2);
        Mat2 A = Mat2::diag(Scalar(0), Scalar(4) * lambda);
        Mat2 B(b22 + Scalar(4) * lambda * lambda, b12, Scalar(0), b22);
        CHECK(admittance_residual(A, B, vf_xbar1(lambda, B)).is_zero());
    }
    // off the family (h2 != 0) the basis element fails
    Mat2 A = Mat2::diag(0, 4);
    Mat2 B(1, 2, 0, 3);
    CHECK_FALSE(admittance_residual(A, B, vf_xbar1(Scalar(1), B)).is_zero());
}

TEST_CASE("affine residual for inhomogeneous systems") {
    // pulling the scaling field through a particular shift keeps it admitted
    SystemSpec sys{Mat2::zero(), Mat2::identity(), Vec2(Scalar(1), Scalar(0)), 0};
    PolyVec yp;
    yp.coeffs = {Vec2(Scalar(-1), Scalar(0))}; // solves B y_p = -f
    VectorField pulled = pullback_step(ParticularShift{yp}, vf_scaling());
    CHECK(pulled.is_affine());
    CHECK(admittance_residual(sys, pulled).is_zero());

    VectorField pulled_tr = pullback_step(ParticularShift{yp}, vf_translation());
    CHECK(admittance_residual(sys, pulled_tr).is_zero());

    // shifting the wrong component is not admitted (R0 = (1, -1) != 0),
    // while the equilibrium-centered shift v = (1, 0) is a true symmetry
    VectorField centered = vf_scaling();
    centered.v[0] = ExpPoly(Scalar(1));
    CHECK(admittance_residual(sys, centered).is_zero());
    VectorField wrong = vf_scaling();
    wrong.v[1] = ExpPoly(Scalar(1));
    CHECK_FALSE(admittance_residual(sys, wrong).is_zero());
}

TEST_CASE("bracket closure on the two-extension class") {
    Scalar lambda(1);
    Mat2 A = Mat2::diag(0, 4);
    Mat2 B(Scalar(1, 4), Scalar(1), Scalar(0), Scalar(-15, 4));
    VectorField x1 = vf_x1(lambda), x2 = vf_x2(lambda);
    REQUIRE(admittance_residual(A, B, x1).is_zero());
    REQUIRE(admittance_residual(A, B, x2).is_zero());
    for (const auto* a : {&x1, &x2})
        for (const auto* b : {&x1, &x2})
            CHECK(admittance_residual(A, B, vf_commutator(*a, *b)).is_zero());
    CHECK(admittance_residual(A, B, vf_commutator(vf_translation(), x1)).is_zero());
    CHECK(admittance_residual(A, B, vf_commutator(vf_scaling(), x2)).is_zero());
}
