#include <doctest.h>

#include <random>

#include "lieclass/canonical.hpp"
#include "lieclass/errors.hpp"
#include "lieclass/reduction.hpp"
#include "testutil.hpp"

using namespace lieclass;

TEST_CASE("commuting input keeps an empty chain") {
    Mat2 M = Mat2::diag(1, 2);
    auto res = canonicalize(Mat2::zero(), M);
    REQUIRE(std::holds_alternative<Commuting>(res.form));
    CHECK(std::get<Commuting>(res.form).M == M);
    CHECK(res.chain.empty());

    // nonzero commuting A folds into M = B + A^2/4
    Mat2 A = Mat2::diag(2, 4);
    auto res2 = canonicalize(A, Mat2::identity());
    REQUIRE(std::holds_alternative<Commuting>(res2.form));
    CHECK(std::get<Commuting>(res2.form).M == Mat2::diag(2, 5));
    CHECK(res2.chain.empty());
}

TEST_CASE("diagonal pair lands in J1 after one exponential shift") {
    // the transformed worked pair: A = diag(1,-1), B as conjugated
    Mat2 A = Mat2::diag(1, -1);
    Mat2 B(Scalar(1, 2), Scalar(-1, 2), Scalar(1, 2), Scalar(-1, 2));
    auto res = canonicalize(A, B);
    REQUIRE(std::holds_alternative<CaseJ1>(res.form));
    const auto& j1 = std::get<CaseJ1>(res.form);
    CHECK(j1.lambda == Scalar(-1, 2));
    CHECK(j1.B == Mat2(Scalar(3, 4), Scalar(-1, 2), Scalar(1, 2), Scalar(-5, 4)));
    REQUIRE(res.chain.size() == 1);
    CHECK(std::get<ExpShift>(res.chain[0]).tau == Scalar(-1, 2));
}

TEST_CASE("rotation pair lands in J2 after one x-scaling") {
    Mat2 A(0, 2, -2, 0);
    Mat2 B = Mat2::diag(1, 2);
    auto res = canonicalize(A, B);
    REQUIRE(std::holds_alternative<CaseJ2>(res.form));
    CHECK(std::get<CaseJ2>(res.form).B == Mat2::diag(Scalar(1, 4), Scalar(1, 2)));
    REQUIRE(res.chain.size() == 1);
    CHECK(std::get<ScaleX>(res.chain[0]).sigma == Scalar(2));
}

TEST_CASE("rotation pair with nonzero real part needs shift and scaling") {
    Mat2 A(2, 3, -3, 2);
    Mat2 B(0, 1, 0, 0);
    auto res = canonicalize(A, B);
    REQUIRE(std::holds_alternative<CaseJ2>(res.form));
    REQUIRE(res.chain.size() == 2);
    CHECK(std::get<ExpShift>(res.chain[0]).tau == Scalar(-1));
    CHECK(std::get<ScaleX>(res.chain[1]).sigma == Scalar(3));
    auto chased = apply_chain(SystemSpec{A, B, Vec2(Scalar(0), Scalar(0)), 0}, res.chain);
    CHECK(chased.A == Mat2(0, 1, -1, 0));
    CHECK(chased.B == std::get<CaseJ2>(res.form).B);
}

TEST_CASE("defective pair lands in J3") {
    Mat2 A(1, 1, -1, 3);
    Mat2 B(0, 1, 0, 0);
    auto res = canonicalize(A, B);
    CHECK(std::holds_alternative<CaseJ3>(res.form));
    // chain: Jordan change then the shift that zeroes the eigenvalue 2
    REQUIRE(res.chain.size() == 2);
    CHECK(std::get<ExpShift>(res.chain[1]).tau == Scalar(-1));
}

TEST_CASE("lambda normalization flag") {
    Mat2 A = Mat2::diag(0, -2); // lambda = -1/2
    Mat2 B(1, 1, 0, 0);
    auto plain = canonicalize(A, B);
    REQUIRE(std::holds_alternative<CaseJ1>(plain.form));
    CHECK(std::get<CaseJ1>(plain.form).lambda == Scalar(-1, 2));

    auto norm = canonicalize(A, B, true);
    REQUIRE(std::holds_alternative<CaseJ1>(norm.form));
    CHECK(std::get<CaseJ1>(norm.form).lambda == Scalar(1));
    REQUIRE(norm.chain.size() == 1);
    CHECK(std::get<ScaleX>(norm.chain[0]).sigma == Scalar(-1, 2));
    // replay confirms diag(0, 4)
    auto [Ac, Bc] = canonical_pair(norm.form);
    CHECK(Ac == Mat2::diag(0, 4));
    auto chased = apply_chain(SystemSpec{A, B, Vec2(Scalar(0), Scalar(0)), 0}, norm.chain);
    CHECK(chased.A == Ac);
    CHECK(chased.B == Bc);
}

TEST_CASE("commuting is decided before the Jordan branch") {
    // a defective A with B commuting (a polynomial in A) must not reach J3
    Mat2 A(0, 1, 0, 0);
    Mat2 B = Scalar(2) * A;
    auto res = canonicalize(A, B);
    REQUIRE(std::holds_alternative<Commuting>(res.form));
    CHECK(std::get<Commuting>(res.form).M == B); // A^2 = 0
    CHECK(res.chain.empty());
}

TEST_CASE("noncommute guard fixtures") {
    CHECK(noncommute_guard(CaseJ1{Scalar(1), Mat2(4, 1, 0, 0)}));
    CHECK_FALSE(noncommute_guard(CaseJ2{Mat2::diag(1, 1)}));
    CHECK(noncommute_guard(CaseJ3{Mat2::diag(1, 2)}));
    CHECK_THROWS_AS(noncommute_guard(Commuting{Mat2::identity()}), Error);
}

TEST_CASE("pinned discriminant propagates") {
    Mat2 A(0, 1, 2, 0); // needs sqrt(2)
    Mat2 B(0, 1, 0, 0);
    REQUIRE_FALSE(commute_test(A, B));
    CHECK_THROWS_AS(canonicalize(A, B, false, mpz_class(5)), Error);
    auto res = canonicalize(A, B, false, mpz_class(2));
    CHECK(std::holds_alternative<CaseJ1>(res.form));
}

TEST_CASE("replay: the chain reproduces the canonical matrices exactly") {
    std::mt19937_64 gen(401);
    int noncommuting = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Mat2 A = testutil::rand_mat2(gen, 5, 3);
        Mat2 B = testutil::rand_mat2(gen, 5, 3);
        auto res = canonicalize(A, B);
        if (std::holds_alternative<Commuting>(res.form)) {
            CHECK(res.chain.empty());
            continue;
        }
        ++noncommuting;
        auto chased = apply_chain(SystemSpec{A, B, Vec2(Scalar(0), Scalar(0)), 0}, res.chain);
        auto [Ac, Bc] = canonical_pair(res.form);
        CHECK(chased.A == Ac);
        CHECK(chased.B == Bc);
        CHECK(noncommute_guard(res.form));
        if (const auto* j1 = std::get_if<CaseJ1>(&res.form))
            CHECK_FALSE(j1->lambda.is_zero());
    }
    CHECK(noncommuting > 150);
}

TEST_CASE("numeric transport along the whole chain") {
    std::mt19937_64 gen(409);
    int done = 0;
    for (int trial = 0; trial < 20 && done < 12; ++trial) {
        Mat2 A = testutil::rand_mat2(gen, 2, 2);
        Mat2 B = testutil::rand_mat2(gen, 2, 2);
        auto res = canonicalize(A, B);
        if (std::holds_alternative<Commuting>(res.form)) continue;
        SystemSpec sys{A, B, Vec2(Scalar(0), Scalar(0)), 0};
        std::array<double, 4> init{testutil::rand_unit(gen), testutil::rand_unit(gen),
                                   testutil::rand_unit(gen), testutil::rand_unit(gen)};
        // transport step by step; each hop must keep solving the running system
        SystemSpec cur = sys;
        Trajectory traj = rk4_solve(cur, init, 0.0, 1.0, 1e-3);
        bool ok = true;
        for (const auto& s : res.chain) {
            if (const auto* sx = std::get_if<ScaleX>(&s))
                if (sx->sigma.sign() < 0) { ok = false; break; } // keeps grids increasing
            CHECK(testutil::transport_residual(cur, s, traj) < 1e-6);
            // move to the transformed system and re-derive the trajectory
            std::array<double, 5> p0 = testutil::transform_point(
                s, {traj.x_at(0), traj.nodes[0][0], traj.nodes[0][1], traj.nodes[0][2],
                    traj.nodes[0][3]});
            std::array<double, 5> p1 = testutil::transform_point(
                s, {traj.x_at(traj.nodes.size() - 1), 0, 0, 0, 0});
            cur = apply_step(cur, s);
            traj = rk4_solve(cur, {p0[1], p0[2], p0[3], p0[4]}, p0[0], p1[0],
                             (p1[0] - p0[0]) / double(traj.nodes.size() - 1));
        }
        if (ok) ++done;
    }
    CHECK(done >= 12);
}
