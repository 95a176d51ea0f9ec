#include "lieclass/prolong.hpp"

#include <cmath>

namespace lieclass {

bool AdmittanceResidual::is_zero() const {
    for (int i = 0; i < 2; ++i) {
        if (!R0[i].is_zero()) return false;
        for (int j = 0; j < 2; ++j)
            if (!R1[i][j].is_zero() || !R2[i][j].is_zero()) return false;
    }
    return true;
}

double AdmittanceResidual::max_abs_at(double x) const {
    double m = 0.0;
    for (int i = 0; i < 2; ++i) {
        m = std::max(m, std::abs(R0[i].eval(x)));
        for (int j = 0; j < 2; ++j) {
            m = std::max(m, std::abs(R1[i][j].eval(x)));
            m = std::max(m, std::abs(R2[i][j].eval(x)));
        }
    }
    return m;
}

AdmittanceResidual admittance_residual(const SystemSpec& sys, const VectorField& vf) {
    const EPMat A = ep_from(sys.A);
    const EPMat B = ep_from(sys.B);
    const EPMat& M = vf.M;
    EPMat M1 = ep_derivative(M);
    EPMat M2 = ep_derivative(M1);
    ExpPoly xi1 = vf.xi.derivative();
    ExpPoly xi2 = xi1.derivative();

    AdmittanceResidual res;

    EPMat two_m1 = ep_scale(ExpPoly(Scalar(2)), M1);
    EPMat am_ma = ep_sub(ep_mul(A, M), ep_mul(M, A));
    EPMat xi2I = ep_scale(xi2, ep_identity());
    EPMat xi1A = ep_scale(xi1, A);
    res.R1 = ep_sub(ep_sub(ep_sub(two_m1, am_ma), xi2I), xi1A);

    EPMat bm_mb = ep_sub(ep_mul(B, M), ep_mul(M, B));
    EPMat two_xi1B = ep_scale(Scalar(2) * xi1, B);
    res.R2 = ep_sub(ep_sub(ep_sub(M2, ep_mul(A, M1)), bm_mb), two_xi1B);

    EPVec v1, v2;
    for (int i = 0; i < 2; ++i) {
        v1[i] = vf.v[i].derivative();
        v2[i] = v1[i].derivative();
    }
    EPVec Av1 = ep_mul_vec(A, v1);
    EPVec Bv = ep_mul_vec(B, vf.v);
    EPVec f_ep{ExpPoly(sys.f.x), ExpPoly(sys.f.y)};
    EPMat gain = ep_sub(M, ep_scale(Scalar(2) * xi1, ep_identity()));
    EPVec gf = ep_mul_vec(gain, f_ep);
    for (int i = 0; i < 2; ++i) res.R0[i] = v2[i] - Av1[i] - Bv[i] + gf[i];

    return res;
}

AdmittanceResidual admittance_residual(const Mat2& A, const Mat2& B, const VectorField& vf) {
    SystemSpec sys{A, B, Vec2(Scalar(0), Scalar(0)), 0};
    return admittance_residual(sys, vf);
}

} // namespace lieclass
