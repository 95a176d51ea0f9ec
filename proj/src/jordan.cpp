#include "lieclass/jordan.hpp"

#include "lieclass/errors.hpp"

namespace lieclass {

namespace {

// Right eigenvector of A for eigenvalue lam, first nonzero entry scaled to 1.
// Only called when A is not diagonal, so a12 != 0 or a21 != 0.
Vec2 eigenvector(const Mat2& A, const Scalar& lam) {
    if (!A(0, 1).is_zero()) {
        // (A - lam) (v1, v2) = 0 with row 1: (a11-lam) v1 + a12 v2 = 0
        return Vec2(Scalar(1), (lam - A(0, 0)) / A(0, 1));
    }
    if (!A(1, 0).is_zero()) {
        Vec2 v((lam - A(1, 1)) / A(1, 0), Scalar(1));
        if (!v.x.is_zero()) return Vec2(Scalar(1), v.y / v.x);
        return v;
    }
    throw internal_inconsistency("eigenvector requested for a diagonal matrix");
}

Mat2 from_columns(const Vec2& u, const Vec2& w) {
    return Mat2(u.x, w.x, u.y, w.y);
}

} // namespace

JordanResult real_jordan(const Mat2& A, const mpz_class& ctx_d) {
    if (A.is_diagonal()) {
        JordanResult r{JordanKind::J1, A, Mat2::identity(), A(0, 0), A(1, 1), std::nullopt};
        return r;
    }

    Scalar tr = A.trace();
    Scalar dt = A.det();
    Scalar disc = tr * tr - Scalar(4) * dt;
    int sg = disc.sign();
    Scalar half(1, 2);

    if (sg > 0) {
        // Two distinct real eigenvalues, ordered descending.
        Scalar root = Scalar::sqrt_of(disc, ctx_d);
        Scalar a = half * (tr + root);
        Scalar b = half * (tr - root);
        Vec2 va = eigenvector(A, a);
        Vec2 vb = eigenvector(A, b);
        Mat2 Q = from_columns(va, vb); // Q^-1 A Q = diag(a, b)
        Mat2 P = Q.inverse();
        JordanResult r{JordanKind::J1, Mat2::diag(a, b), P, a, b, std::nullopt};
        return r;
    }

    if (sg < 0) {
        // Complex pair a +- i c, c > 0. Real basis (u, w) with
        // A u = a u - c w, A w = c u + a w gives Q^-1 A Q = [[a, c], [-c, a]].
        Scalar a = half * tr;
        Scalar c = half * Scalar::sqrt_of(-disc, ctx_d);
        Vec2 u(Scalar(1), Scalar(0));
        Vec2 w = c.inverse() * (a * u - A * u);
        if (w.y.is_zero())
            throw internal_inconsistency("complex-pair basis degenerate for a triangular matrix");
        Mat2 Q = from_columns(u, w);
        Mat2 P = Q.inverse();
        JordanResult r{JordanKind::J2, Mat2(a, c, -c, a), P, a, std::nullopt, c};
        return r;
    }

    // Repeated eigenvalue; A is not diagonal, hence defective.
    Scalar a = half * tr;
    Mat2 N = A - Mat2::diag(a, a);
    // Jordan chain: v with N v != 0, then basis (N v, v).
    Vec2 v(Scalar(1), Scalar(0));
    Vec2 nv = N * v;
    if (nv.is_zero()) {
        v = Vec2(Scalar(0), Scalar(1));
        nv = N * v;
    }
    Mat2 Q = from_columns(nv, v);
    Mat2 P = Q.inverse();
    JordanResult r{JordanKind::J3, Mat2(a, Scalar(1), Scalar(0), a), P, a,
                   std::nullopt, std::nullopt};
    return r;
}

} // namespace lieclass
