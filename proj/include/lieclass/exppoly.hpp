#pragma once

#include <string>
#include <vector>

#include "lieclass/scalar.hpp"

namespace lieclass {

/// One term c * x^k * e^(mu*x + theta). theta is 0 for everything the
/// classifier produces; it only becomes nonzero when a field is pulled back
/// through a shift of x, where e^(mu*x0) factors appear. Distinct exponents
/// stay linearly independent over the coefficient field, so the exact zero
/// test (no terms) remains valid.
struct ExpTerm {
    Scalar c;
    unsigned k = 0;
    Scalar mu;
    Scalar theta;
};

/// Finite sums of exp-polynomial terms, closed under +, *, d/dx and the
/// substitutions x -> x + x0, x -> sigma*x. Terms are kept merged, nonzero
/// and sorted lexicographically by (mu, k, theta), so operator== is
/// structural equality of canonical forms.
class ExpPoly {
public:
    ExpPoly() = default;
    ExpPoly(const Scalar& constant); // NOLINT(google-explicit-constructor)

    /// c * x^k * e^(mu*x)
    static ExpPoly term(const Scalar& c, unsigned k, const Scalar& mu,
                        const Scalar& theta = Scalar(0));

    const std::vector<ExpTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when the poly is a plain constant; the value is then *out.
    bool constant_value(Scalar* out) const;

    ExpPoly derivative() const;

    /// p(x) -> p(x + x0): binomial expansion in x, e^(mu*x0) absorbed into theta.
    ExpPoly shift_x(const Scalar& x0) const;
    /// p(x) -> p(sigma*x)
    ExpPoly scale_x(const Scalar& sigma) const;
    /// p(x) -> e^(mu0*x) * p(x)
    ExpPoly mul_exp(const Scalar& mu0) const;

    double eval(double x) const;

    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const Scalar& c, const ExpPoly& p);
    ExpPoly operator-() const;
    friend bool operator==(const ExpPoly& a, const ExpPoly& b);
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(const ExpTerm& t);
    void normalize();

    std::vector<ExpTerm> terms_;
};

} // namespace lieclass
