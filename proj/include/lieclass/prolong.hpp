#pragma once

#include "lieclass/system.hpp"
#include "lieclass/vectorfield.hpp"

namespace lieclass {

/// Coefficient blocks of the prolonged symmetry condition for
/// u'' = A u' + B u + f applied to X = xi(x) d/dx + (M(x) u + v(x)) . d/du.
/// Substituting u'' into the second prolongation and collecting u', u and
/// constant terms gives
///   R1 = 2 M' - (A M - M A) - xi'' I - xi' A
///   R2 = M'' - A M' - (B M - M B) - 2 xi' B
///   R0 = v'' - A v' - B v + (M - 2 xi' I) f
/// and X is admitted iff all three vanish identically.
struct AdmittanceResidual {
    EPMat R1{};
    EPMat R2{};
    EPVec R0{};

    bool is_zero() const;
    /// Largest |entry(x)| over R1, R2, R0 at a sample point.
    double max_abs_at(double x) const;
};

AdmittanceResidual admittance_residual(const Mat2& A, const Mat2& B, const VectorField& vf);
AdmittanceResidual admittance_residual(const SystemSpec& sys, const VectorField& vf);

} // namespace lieclass
