#include "lieclass/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "lieclass/errors.hpp"

namespace lieclass {

Scalar::Scalar(long num, long den) : rat_(num, den), ext_(0), d_(0) {
    if (den == 0) throw malformed_input("zero denominator");
    rat_.canonicalize();
}

Scalar::Scalar(const mpq_class& rat, const mpq_class& ext, const mpz_class& d)
    : rat_(rat), ext_(ext), d_(d) {
    normalize();
}

void Scalar::normalize() {
    if (ext_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ <= 1) throw internal_inconsistency("extension part with invalid discriminant");
}

mpz_class Scalar::merge_d(const Scalar& a, const Scalar& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw unsupported_discriminant("cannot combine sqrt(" + a.d_.get_str() +
                                   ") with sqrt(" + b.d_.get_str() + ")");
}

Scalar Scalar::parse(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (!t.empty() && t[0] == '+') t.erase(t.begin());

    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        bool slash = false;
        for (; i < s.size(); ++i) {
            if (s[i] == '/') {
                if (slash || i + 1 >= s.size()) return false;
                slash = true;
            } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    if (!valid(t)) throw malformed_input("cannot parse rational '" + text + "'");

    mpq_class q;
    if (q.set_str(t, 10) != 0) throw malformed_input("cannot parse rational '" + text + "'");
    if (q.get_den() == 0) throw malformed_input("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::sqrt_of(const Scalar& x, const mpz_class& ctx_d) {
    if (!x.is_rational())
        throw unsupported_discriminant("square root of a Q(sqrt(d)) element is a nested radical");
    if (x.rat_ < 0) throw internal_inconsistency("sqrt_of called on a negative value");
    if (x.rat_ == 0) return Scalar(0);

    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class p = x.rat_.get_num();
    mpz_class q = x.rat_.get_den();
    mpz_class n = p * q;
    mpz_class m, s;
    squarefree_decompose(n, m, s);
    if (s == 1) return Scalar(mpq_class(m) / mpq_class(q));
    if (ctx_d != 0 && s != ctx_d)
        throw unsupported_discriminant("needs sqrt(" + s.get_str() +
                                       ") but the context fixes sqrt(" + ctx_d.get_str() + ")");
    mpq_class e = mpq_class(m) / mpq_class(q);
    e.canonicalize();
    return Scalar(mpq_class(0), e, s);
}

int Scalar::sign() const {
    if (ext_ == 0) return sgn(rat_);
    if (rat_ == 0) return sgn(ext_);
    int sr = sgn(rat_), se = sgn(ext_);
    if (sr == se) return sr;
    // Opposite signs: compare |rat| with |ext|*sqrt(d) exactly.
    // rat^2 == ext^2*d is impossible since d is not a square.
    mpq_class lhs = rat_ * rat_;
    mpq_class rhs = ext_ * ext_ * mpq_class(d_);
    return lhs > rhs ? sr : se;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.rat_ = -r.rat_;
    r.ext_ = -r.ext_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    mpz_class d = merge_d(*this, o);
    rat_ += o.rat_;
    ext_ += o.ext_;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    mpz_class d = merge_d(*this, o);
    rat_ -= o.rat_;
    ext_ -= o.ext_;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpz_class d = merge_d(*this, o);
    mpq_class r = rat_ * o.rat_ + ext_ * o.ext_ * mpq_class(d);
    mpq_class e = rat_ * o.ext_ + ext_ * o.rat_;
    rat_ = r;
    ext_ = e;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw internal_inconsistency("division by zero scalar");
    if (ext_ == 0) return Scalar(mpq_class(1) / rat_);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is
    // nonzero because d is not a square.
    mpq_class norm = rat_ * rat_ - ext_ * ext_ * mpq_class(d_);
    return Scalar(rat_ / norm, -ext_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.rat_ != b.rat_ || a.ext_ != b.ext_) return false;
    if (a.ext_ == 0) return true;
    return a.d_ == b.d_;
}

Scalar Scalar::pow(unsigned n) const {
    Scalar acc(1);
    Scalar base(*this);
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

double Scalar::to_double() const {
    double v = rat_.get_d();
    if (ext_ != 0) v += ext_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::string Scalar::str() const {
    if (ext_ == 0) return rat_.get_str();
    std::string e = ext_.get_str();
    std::string tail = (ext_ < 0 ? " - " + mpq_class(-ext_).get_str() : " + " + e) +
                       "*sqrt(" + d_.get_str() + ")";
    if (rat_ == 0) {
        if (ext_ < 0) return "-" + mpq_class(-ext_).get_str() + "*sqrt(" + d_.get_str() + ")";
        return e + "*sqrt(" + d_.get_str() + ")";
    }
    return rat_.get_str() + tail;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

void squarefree_decompose(const mpz_class& n, mpz_class& m, mpz_class& s) {
    if (n <= 0) throw internal_inconsistency("squarefree_decompose needs n > 0");
    mpz_class rest = n;
    m = 1;
    s = 1;
    const unsigned long bound = 1000000;
    auto factor_out = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e == 0) return;
        for (unsigned i = 0; i < e / 2; ++i) m *= p;
        if (e % 2) s *= p;
    };
    factor_out(2);
    for (unsigned long p = 3; p <= bound; p += 2) {
        if (mpz_cmp_ui(rest.get_mpz_t(), 1) == 0) break;
        mpz_class pp = mpz_class(p) * p;
        if (pp > rest) break;
        factor_out(p);
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            m *= r;
        } else {
            s *= rest;
        }
    }
}

} // namespace lieclass
