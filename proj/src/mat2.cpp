#include "lieclass/mat2.hpp"

#include "lieclass/errors.hpp"

namespace lieclass {

bool Mat2::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Mat2 Mat2::inverse() const {
    Scalar dt = det();
    if (dt.is_zero()) throw Error(ErrorKind::SingularP, "singular matrix has no inverse");
    Scalar inv = dt.inverse();
    return Mat2(inv * e_[3], -(inv * e_[1]), -(inv * e_[2]), inv * e_[0]);
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Mat2 operator*(const Scalar& c, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = c * a.e_[i];
    return r;
}

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return Vec2(a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y);
}

Mat2 Mat2::operator-() const {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = -e_[i];
    return r;
}

bool operator==(const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 4; ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

std::string Mat2::str() const {
    return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " +
           e_[3].str() + "]]";
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

} // namespace lieclass
