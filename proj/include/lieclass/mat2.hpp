#pragma once

#include <array>
#include <string>

#include "lieclass/scalar.hpp"

namespace lieclass {

struct Vec2 {
    Scalar x, y;

    Vec2() = default;
    Vec2(Scalar a, Scalar b) : x(std::move(a)), y(std::move(b)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Scalar& c, const Vec2& v) { return {c * v.x, c * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// 2x2 matrix over the exact scalar field.
class Mat2 {
public:
    Mat2() = default;
    Mat2(Scalar a11, Scalar a12, Scalar a21, Scalar a22)
        : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }
    static Mat2 zero() { return Mat2(); }
    static Mat2 diag(Scalar a, Scalar b) { return Mat2(std::move(a), 0, 0, std::move(b)); }

    const Scalar& operator()(int r, int c) const { return e_[r * 2 + c]; }
    Scalar& operator()(int r, int c) { return e_[r * 2 + c]; }

    Scalar trace() const { return e_[0] + e_[3]; }
    Scalar det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    bool is_zero() const;
    bool is_diagonal() const { return e_[1].is_zero() && e_[2].is_zero(); }

    /// Throws SingularP on zero determinant.
    Mat2 inverse() const;

    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator-(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const Scalar& c, const Mat2& a);
    friend Vec2 operator*(const Mat2& a, const Vec2& v);
    Mat2 operator-() const;
    friend bool operator==(const Mat2& a, const Mat2& b);
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Scalar, 4> e_{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
};

/// AB - BA, exact.
Mat2 commutator(const Mat2& a, const Mat2& b);

} // namespace lieclass
