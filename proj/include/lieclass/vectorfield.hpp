#pragma once

#include <array>
#include <string>

#include "lieclass/exppoly.hpp"
#include "lieclass/mat2.hpp"
#include "lieclass/system.hpp"

namespace lieclass {

using EPMat = std::array<std::array<ExpPoly, 2>, 2>;
using EPVec = std::array<ExpPoly, 2>;

EPMat ep_from(const Mat2& m);
EPMat ep_identity();
EPMat ep_add(const EPMat& a, const EPMat& b);
EPMat ep_sub(const EPMat& a, const EPMat& b);
EPMat ep_mul(const EPMat& a, const EPMat& b);
EPMat ep_scale(const ExpPoly& c, const EPMat& a);
EPMat ep_derivative(const EPMat& a);
bool ep_is_zero(const EPMat& a);
EPVec ep_mul_vec(const EPMat& a, const EPVec& v);

/// Point-symmetry candidate X = xi(x) d/dx + eta . d/du with eta = M(x) u + v(x)
/// (u = (y, z)). The affine part v is zero for every classifier output; it
/// appears when a field is pulled back through a particular-solution shift.
struct VectorField {
    std::string name;
    ExpPoly xi;
    EPMat M{};
    EPVec v{};

    bool is_zero() const;
    bool is_affine() const; // v != 0

    friend bool operator==(const VectorField& a, const VectorField& b);
};

/// d/dx (autonomy) and y d/dy + z d/dz (linearity scaling), admitted by every
/// system in the class.
VectorField vf_translation();
VectorField vf_scaling();

/// X1 = e^(-2 lambda x) z d/dy
VectorField vf_x1(const Scalar& lambda);
/// X2 = e^(-lambda x) (2 d/dx - lambda (y d/dy - 3 z d/dz))
VectorField vf_x2(const Scalar& lambda);
/// Internal basis element
/// Xbar1 = e^(-2 lambda x) (h2 (d/dx - lambda(y d/dy - z d/dz)) - 2 lambda b12 z d/dy).
VectorField vf_xbar1(const Scalar& lambda, const Mat2& B);

/// Lie bracket [X, Y] in the same (xi(x), M(x), v(x)) class.
VectorField vf_commutator(const VectorField& X, const VectorField& Y);

/// Expresses a field given in post-chain coordinates in the pre-chain ones
/// (steps are unwound in reverse order):
///   LinearChange(P):    M -> P^-1 M P, v -> P^-1 v
///   ExpShift(tau):      M -> M - tau*xi*I, v -> e^(-tau x) v
///   ScaleX(sigma):      xi(x) -> xi(sigma x)/sigma, M/v substitute sigma x
///   ShiftX(x0):         substitute x -> x + x0 everywhere
///   ParticularShift(w): v -> v + xi*w' - M*w
VectorField pullback_vf(const TransformChain& chain, const VectorField& vf);

/// Single-step version of the above.
VectorField pullback_step(const TransformStep& step, const VectorField& vf);

} // namespace lieclass
