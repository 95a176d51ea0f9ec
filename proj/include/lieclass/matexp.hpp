#pragma once

#include <array>

#include "lieclass/mat2.hpp"

namespace lieclass {

/// Plain double 2x2 for the numeric side (matrix exponentials, RK4 shadows).
struct DMat2 {
    std::array<std::array<double, 2>, 2> m{{{0.0, 0.0}, {0.0, 0.0}}};

    static DMat2 identity();
    static DMat2 from(const Mat2& a);

    double max_abs() const;
    friend DMat2 operator+(const DMat2& a, const DMat2& b);
    friend DMat2 operator-(const DMat2& a, const DMat2& b);
    friend DMat2 operator*(const DMat2& a, const DMat2& b);
    friend DMat2 operator*(double c, const DMat2& a);
};

/// e^(t*A) in closed form: with M = tA, m = tr(M)/2, N = M - mI one has
/// N^2 = delta*I, so e^M = e^m (cosh(s) I + sinh(s)/s N) for delta = s^2 > 0,
/// and the cos/sin analogue for delta < 0; a short series covers delta ~ 0.
/// Relative error is a few ulp for ||tA|| <= 10.
DMat2 mat_exp_numeric(const Mat2& A, double t);
DMat2 mat_exp_numeric(const DMat2& A, double t);

} // namespace lieclass
