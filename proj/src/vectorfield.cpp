#include "lieclass/vectorfield.hpp"

namespace lieclass {

EPMat ep_from(const Mat2& m) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = ExpPoly(m(i, j));
    return r;
}

EPMat ep_identity() { return ep_from(Mat2::identity()); }

EPMat ep_add(const EPMat& a, const EPMat& b) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

EPMat ep_sub(const EPMat& a, const EPMat& b) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

EPMat ep_mul(const EPMat& a, const EPMat& b) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

EPMat ep_scale(const ExpPoly& c, const EPMat& a) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = c * a[i][j];
    return r;
}

EPMat ep_derivative(const EPMat& a) {
    EPMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j].derivative();
    return r;
}

bool ep_is_zero(const EPMat& a) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!a[i][j].is_zero()) return false;
    return true;
}

EPVec ep_mul_vec(const EPMat& a, const EPVec& v) {
    EPVec r;
    for (int i = 0; i < 2; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1];
    return r;
}

bool VectorField::is_zero() const {
    return xi.is_zero() && ep_is_zero(M) && v[0].is_zero() && v[1].is_zero();
}

bool VectorField::is_affine() const { return !v[0].is_zero() || !v[1].is_zero(); }

bool operator==(const VectorField& a, const VectorField& b) {
    return a.xi == b.xi && a.M == b.M && a.v == b.v;
}

VectorField vf_translation() {
    VectorField f;
    f.name = "dx";
    f.xi = ExpPoly(Scalar(1));
    return f;
}

VectorField vf_scaling() {
    VectorField f;
    f.name = "scaling";
    f.M = ep_identity();
    return f;
}

VectorField vf_x1(const Scalar& lambda) {
    VectorField f;
    f.name = "X1";
    f.M[0][1] = ExpPoly::term(Scalar(1), 0, Scalar(-2) * lambda);
    return f;
}

VectorField vf_x2(const Scalar& lambda) {
    VectorField f;
    f.name = "X2";
    ExpPoly e = ExpPoly::term(Scalar(1), 0, -lambda);
    f.xi = Scalar(2) * e;
    f.M[0][0] = -lambda * e;
    f.M[1][1] = Scalar(3) * lambda * e;
    return f;
}

VectorField vf_xbar1(const Scalar& lambda, const Mat2& B) {
    Scalar h2 = B(1, 1) - B(0, 0) + Scalar(4) * lambda * lambda;
    VectorField f;
    f.name = "Xbar1";
    ExpPoly e = ExpPoly::term(Scalar(1), 0, Scalar(-2) * lambda);
    f.xi = h2 * e;
    f.M[0][0] = (-lambda * h2) * e;
    f.M[0][1] = (Scalar(-2) * lambda * B(0, 1)) * e;
    f.M[1][1] = (lambda * h2) * e;
    return f;
}

VectorField vf_commutator(const VectorField& X, const VectorField& Y) {
    VectorField r;
    r.name = "[" + X.name + "," + Y.name + "]";
    r.xi = X.xi * Y.xi.derivative() - Y.xi * X.xi.derivative();
    EPMat m = ep_sub(ep_scale(X.xi, ep_derivative(Y.M)), ep_scale(Y.xi, ep_derivative(X.M)));
    m = ep_add(m, ep_sub(ep_mul(Y.M, X.M), ep_mul(X.M, Y.M)));
    r.M = m;
    for (int i = 0; i < 2; ++i)
        r.v[i] = X.xi * Y.v[i].derivative() - Y.xi * X.v[i].derivative();
    EPVec yx = ep_mul_vec(Y.M, X.v);
    EPVec xy = ep_mul_vec(X.M, Y.v);
    for (int i = 0; i < 2; ++i) r.v[i] = r.v[i] + yx[i] - xy[i];
    return r;
}

VectorField pullback_step(const TransformStep& step, const VectorField& vf) {
    VectorField out = vf;
    if (const auto* lc = std::get_if<LinearChange>(&step)) {
        Mat2 Pinv = lc->P.inverse();
        out.M = ep_mul(ep_from(Pinv), ep_mul(vf.M, ep_from(lc->P)));
        out.v = ep_mul_vec(ep_from(Pinv), vf.v);
    } else if (const auto* es = std::get_if<ExpShift>(&step)) {
        ExpPoly shift = es->tau * vf.xi;
        out.M[0][0] = vf.M[0][0] - shift;
        out.M[1][1] = vf.M[1][1] - shift;
        for (int i = 0; i < 2; ++i) out.v[i] = vf.v[i].mul_exp(-es->tau);
    } else if (const auto* sx = std::get_if<ScaleX>(&step)) {
        out.xi = sx->sigma.inverse() * vf.xi.scale_x(sx->sigma);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.M[i][j] = vf.M[i][j].scale_x(sx->sigma);
        for (int i = 0; i < 2; ++i) out.v[i] = vf.v[i].scale_x(sx->sigma);
    } else if (const auto* sh = std::get_if<ShiftX>(&step)) {
        out.xi = vf.xi.shift_x(sh->x0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.M[i][j] = vf.M[i][j].shift_x(sh->x0);
        for (int i = 0; i < 2; ++i) out.v[i] = vf.v[i].shift_x(sh->x0);
    } else {
        const auto& ps = std::get<ParticularShift>(step);
        // u = u_bar + w(x): eta = xi * w' + M (u - w) + v_bar.
        PolyVec w1 = ps.y_p.derivative();
        EPVec w_ep, w1_ep;
        for (int i = 0; i < 2; ++i) {
            w_ep[i] = ExpPoly();
            w1_ep[i] = ExpPoly();
        }
        for (std::size_t k = 0; k < ps.y_p.coeffs.size(); ++k) {
            w_ep[0] = w_ep[0] + ExpPoly::term(ps.y_p.coeffs[k].x, unsigned(k), Scalar(0));
            w_ep[1] = w_ep[1] + ExpPoly::term(ps.y_p.coeffs[k].y, unsigned(k), Scalar(0));
        }
        for (std::size_t k = 0; k < w1.coeffs.size(); ++k) {
            w1_ep[0] = w1_ep[0] + ExpPoly::term(w1.coeffs[k].x, unsigned(k), Scalar(0));
            w1_ep[1] = w1_ep[1] + ExpPoly::term(w1.coeffs[k].y, unsigned(k), Scalar(0));
        }
        EPVec mw = ep_mul_vec(vf.M, w_ep);
        for (int i = 0; i < 2; ++i) out.v[i] = vf.v[i] + vf.xi * w1_ep[i] - mw[i];
    }
    return out;
}

VectorField pullback_vf(const TransformChain& chain, const VectorField& vf) {
    VectorField cur = vf;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        cur = pullback_step(*it, cur);
    return cur;
}

} // namespace lieclass
