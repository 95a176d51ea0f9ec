#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace lieclass {

/// Exact element of Q or of a real quadratic field Q(sqrt(d)):
///     value = rat + ext * sqrt(d)
/// with d a fixed square-free integer > 1 per value. A value with ext == 0
/// carries no discriminant (d == 0), so plain rationals mix freely with any
/// extension. Combining two values whose (nonzero) discriminants differ, or
/// taking a square root of a proper extension element (a nested radical),
/// throws UnsupportedDiscriminant. Equality and the zero test are exact:
/// rat + ext*sqrt(d) == 0 iff rat == ext == 0, because d is not a square.
class Scalar {
public:
    Scalar() : rat_(0), ext_(0), d_(0) {}
    Scalar(long n) : rat_(n), ext_(0), d_(0) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : rat_(q), ext_(0), d_(0) {}
    Scalar(const mpq_class& rat, const mpq_class& ext, const mpz_class& d);

    /// Parses "p", "-p", or "p/q" (base 10). Throws MalformedInput.
    static Scalar parse(const std::string& text);

    /// sqrt of a nonnegative value. A rational input yields either a rational
    /// or a fresh extension element with square-free d; proper extension
    /// inputs are rejected (one quadratic extension per run). ctx_d, when
    /// nonzero, pins the allowed discriminant.
    static Scalar sqrt_of(const Scalar& x, const mpz_class& ctx_d = 0);

    const mpq_class& rat() const { return rat_; }
    const mpq_class& ext() const { return ext_; }
    const mpz_class& d() const { return d_; }

    bool is_zero() const { return rat_ == 0 && ext_ == 0; }
    bool is_rational() const { return ext_ == 0; }
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

    Scalar pow(unsigned n) const;
    Scalar inverse() const;

    double to_double() const;

    /// Canonical text: "p/q" for rationals, "p/q + r/s*sqrt(d)" otherwise.
    std::string str() const;

private:
    void normalize();
    static mpz_class merge_d(const Scalar& a, const Scalar& b);

    mpq_class rat_;
    mpq_class ext_;
    mpz_class d_; // 0 when ext_ == 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square-free decomposition n = m^2 * s (n > 0); returns (m, s).
/// Trial division up to 10^6 plus a perfect-square test on the cofactor;
/// cofactors of the form (pq)^2 with both primes above the bound would be
/// mis-split, far outside the intended input range.
void squarefree_decompose(const mpz_class& n, mpz_class& m, mpz_class& s);

} // namespace lieclass
