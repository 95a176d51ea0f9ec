#pragma once

#include <variant>
#include <vector>

#include "lieclass/mat2.hpp"

namespace lieclass {

/// y'' = A y' + B y + f with constant coefficients; f = 0 means homogeneous.
/// ctx_d pins the quadratic extension for the whole computation (0 = free).
struct SystemSpec {
    Mat2 A;
    Mat2 B;
    Vec2 f;
    mpz_class ctx_d = 0;
};

/// Constant polynomial vector y_p(x) = sum coeffs[i] * x^i, degree <= 3.
struct PolyVec {
    std::vector<Vec2> coeffs; // coeffs[i] multiplies x^i

    Vec2 eval_coeff(std::size_t i) const {
        return i < coeffs.size() ? coeffs[i] : Vec2(Scalar(0), Scalar(0));
    }
    PolyVec derivative() const;
    bool is_zero() const;
    PolyVec operator-() const;
};

// Equivalence-transformation steps, each exactly invertible. A step maps the
// current system to a new one; chains are recorded in application order.
struct LinearChange { Mat2 P; };           // y_bar = P y
struct ExpShift { Scalar tau; };           // y_bar = e^(tau x) y
struct ScaleX { Scalar sigma; };           // x_bar = sigma x
struct ShiftX { Scalar x0; };              // x_bar = x + x0
struct ParticularShift { PolyVec y_p; };   // y_bar = y - y_p(x)

using TransformStep = std::variant<LinearChange, ExpShift, ScaleX, ShiftX, ParticularShift>;
using TransformChain = std::vector<TransformStep>;

/// Homogeneous pair under one step. ShiftX and ParticularShift leave (A, B)
/// unchanged. Throws SingularP for a singular linear change.
std::pair<Mat2, Mat2> apply_step(const Mat2& A, const Mat2& B, const TransformStep& s);

/// Full system (including f) under one step.
SystemSpec apply_step(const SystemSpec& sys, const TransformStep& s);

SystemSpec apply_chain(const SystemSpec& sys, const TransformChain& chain);

TransformStep inverse_step(const TransformStep& s);
TransformChain inverse_chain(const TransformChain& chain);

/// True for P = I, tau = 0, sigma = 1, x0 = 0, y_p = 0.
bool is_identity_step(const TransformStep& s);

} // namespace lieclass
