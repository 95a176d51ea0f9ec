#include "lieclass/exppoly.hpp"

#include <algorithm>
#include <cmath>

namespace lieclass {

namespace {

// Lexicographic key (mu, k, theta); scalars compare exactly.
bool term_key_less(const ExpTerm& a, const ExpTerm& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.k != b.k) return a.k < b.k;
    if (a.theta != b.theta) return a.theta < b.theta;
    return false;
}

bool term_key_eq(const ExpTerm& a, const ExpTerm& b) {
    return a.mu == b.mu && a.k == b.k && a.theta == b.theta;
}

Scalar binom(unsigned n, unsigned r) {
    Scalar acc(1);
    for (unsigned i = 0; i < r; ++i) acc = acc * Scalar(long(n - i)) / Scalar(long(i + 1));
    return acc;
}

} // namespace

ExpPoly::ExpPoly(const Scalar& constant) {
    if (!constant.is_zero()) terms_.push_back(ExpTerm{constant, 0, Scalar(0), Scalar(0)});
}

ExpPoly ExpPoly::term(const Scalar& c, unsigned k, const Scalar& mu, const Scalar& theta) {
    ExpPoly p;
    if (!c.is_zero()) p.terms_.push_back(ExpTerm{c, k, mu, theta});
    return p;
}

bool ExpPoly::constant_value(Scalar* out) const {
    if (terms_.empty()) {
        if (out) *out = Scalar(0);
        return true;
    }
    if (terms_.size() == 1 && terms_[0].k == 0 && terms_[0].mu.is_zero() &&
        terms_[0].theta.is_zero()) {
        if (out) *out = terms_[0].c;
        return true;
    }
    return false;
}

void ExpPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_key_less);
    std::vector<ExpTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && term_key_eq(merged.back(), t)) {
            merged.back().c += t.c;
            if (merged.back().c.is_zero()) merged.pop_back();
        } else if (!t.c.is_zero()) {
            merged.push_back(t);
        }
    }
    terms_ = std::move(merged);
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly r;
    for (const auto& t : terms_) {
        if (!t.mu.is_zero()) r.terms_.push_back(ExpTerm{t.c * t.mu, t.k, t.mu, t.theta});
        if (t.k > 0) r.terms_.push_back(ExpTerm{Scalar(long(t.k)) * t.c, t.k - 1, t.mu, t.theta});
    }
    r.normalize();
    return r;
}

ExpPoly ExpPoly::shift_x(const Scalar& x0) const {
    ExpPoly r;
    for (const auto& t : terms_) {
        // c*(x+x0)^k e^(mu x + mu x0 + theta)
        Scalar new_theta = t.theta + t.mu * x0;
        for (unsigned j = 0; j <= t.k; ++j) {
            Scalar coeff = t.c * binom(t.k, j) * x0.pow(t.k - j);
            r.terms_.push_back(ExpTerm{coeff, j, t.mu, new_theta});
        }
    }
    r.normalize();
    return r;
}

ExpPoly ExpPoly::scale_x(const Scalar& sigma) const {
    ExpPoly r;
    for (const auto& t : terms_)
        r.terms_.push_back(ExpTerm{t.c * sigma.pow(t.k), t.k, t.mu * sigma, t.theta});
    r.normalize();
    return r;
}

ExpPoly ExpPoly::mul_exp(const Scalar& mu0) const {
    ExpPoly r;
    for (const auto& t : terms_) r.terms_.push_back(ExpTerm{t.c, t.k, t.mu + mu0, t.theta});
    r.normalize();
    return r;
}

double ExpPoly::eval(double x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double p = 1.0;
        for (unsigned i = 0; i < t.k; ++i) p *= x;
        acc += t.c.to_double() * p * std::exp(t.mu.to_double() * x + t.theta.to_double());
    }
    return acc;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    r.terms_ = a.terms_;
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.normalize();
    return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            r.terms_.push_back(ExpTerm{s.c * t.c, s.k + t.k, s.mu + t.mu, s.theta + t.theta});
    r.normalize();
    return r;
}

ExpPoly operator*(const Scalar& c, const ExpPoly& p) {
    ExpPoly r;
    if (c.is_zero()) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.c = c * t.c;
    return r;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& s = a.terms_[i];
        const auto& t = b.terms_[i];
        if (!(s.c == t.c) || s.k != t.k || !(s.mu == t.mu) || !(s.theta == t.theta))
            return false;
    }
    return true;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string piece;
        bool neg = t.c.sign() < 0;
        Scalar mag = neg ? -t.c : t.c;
        std::string cs = mag.str();
        bool unit = (mag == Scalar(1));
        std::string factors;
        if (t.k > 0) factors += (t.k == 1) ? "x" : "x^" + std::to_string(t.k);
        if (!t.mu.is_zero() || !t.theta.is_zero()) {
            std::string arg;
            if (!t.mu.is_zero()) {
                if (t.mu == Scalar(1)) arg = "x";
                else if (t.mu == Scalar(-1)) arg = "-x";
                else arg = "(" + t.mu.str() + ")*x";
            }
            if (!t.theta.is_zero()) {
                if (arg.empty()) arg = t.theta.str();
                else arg += (t.theta.sign() > 0 ? " + " + t.theta.str()
                                                : " - " + (-t.theta).str());
            }
            if (!factors.empty()) factors += "*";
            factors += "e^(" + arg + ")";
        }
        if (factors.empty()) piece = cs;
        else if (unit) piece = factors;
        else piece = ((mag.is_rational()) ? cs : "(" + cs + ")") + "*" + factors;
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " + piece : " + " + piece;
        }
    }
    return out;
}

} // namespace lieclass
