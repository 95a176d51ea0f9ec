#include "lieclass/matexp.hpp"

#include <cmath>

namespace lieclass {

DMat2 DMat2::identity() {
    DMat2 r;
    r.m[0][0] = r.m[1][1] = 1.0;
    return r;
}

DMat2 DMat2::from(const Mat2& a) {
    DMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a(i, j).to_double();
    return r;
}

double DMat2::max_abs() const {
    double v = 0.0;
    for (const auto& row : m)
        for (double x : row) v = std::max(v, std::abs(x));
    return v;
}

DMat2 operator+(const DMat2& a, const DMat2& b) {
    DMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
}

DMat2 operator-(const DMat2& a, const DMat2& b) {
    DMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
}

DMat2 operator*(const DMat2& a, const DMat2& b) {
    DMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

DMat2 operator*(double c, const DMat2& a) {
    DMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = c * a.m[i][j];
    return r;
}

DMat2 mat_exp_numeric(const DMat2& A, double t) {
    DMat2 M = t * A;
    double mean = 0.5 * (M.m[0][0] + M.m[1][1]);
    DMat2 N = M - mean * DMat2::identity();
    // N = [[n, p], [q, -n]] squares to (n^2 + pq) I.
    double delta = N.m[0][0] * N.m[0][0] + N.m[0][1] * N.m[1][0];

    double ch, shc; // cosh(s), sinh(s)/s in s^2 = delta (analytic in delta)
    if (std::abs(delta) < 1e-6) {
        ch = 1.0 + delta / 2.0 + delta * delta / 24.0 + delta * delta * delta / 720.0;
        shc = 1.0 + delta / 6.0 + delta * delta / 120.0 + delta * delta * delta / 5040.0;
    } else if (delta > 0.0) {
        double s = std::sqrt(delta);
        ch = std::cosh(s);
        shc = std::sinh(s) / s;
    } else {
        double s = std::sqrt(-delta);
        ch = std::cos(s);
        shc = std::sin(s) / s;
    }
    double em = std::exp(mean);
    return em * (ch * DMat2::identity() + shc * N);
}

DMat2 mat_exp_numeric(const Mat2& A, double t) { return mat_exp_numeric(DMat2::from(A), t); }

} // namespace lieclass
