#include "lieclass/canonical.hpp"

#include "lieclass/errors.hpp"
#include "lieclass/jordan.hpp"
#include "lieclass/reduction.hpp"

namespace lieclass {

namespace {

void push_step(TransformChain& chain, Mat2& A, Mat2& B, const TransformStep& s) {
    auto [An, Bn] = apply_step(A, B, s);
    A = An;
    B = Bn;
    if (!is_identity_step(s)) chain.push_back(s);
}

} // namespace

CanonicalizeResult canonicalize(const Mat2& A0, const Mat2& B0, bool normalize_lambda,
                                const mpz_class& ctx_d) {
    if (commute_test(A0, B0)) {
        return CanonicalizeResult{Commuting{reduce_to_M(A0, B0)}, {}};
    }

    JordanResult jr = real_jordan(A0, ctx_d);
    Mat2 A = A0, B = B0;
    TransformChain chain;
    push_step(chain, A, B, LinearChange{jr.P});

    CanonicalForm form;
    switch (jr.kind) {
    case JordanKind::J1: {
        // A = diag(a, b) -> diag(0, b - a); lambda = (b - a)/4 is nonzero
        // because a repeated diagonalizable eigenvalue means A = aI, which
        // commutes with everything and was handled above.
        Scalar a = A(0, 0);
        push_step(chain, A, B, ExpShift{Scalar(-1, 2) * a});
        Scalar lambda = Scalar(1, 4) * A(1, 1);
        if (lambda.is_zero())
            throw internal_inconsistency("J1 branch reached with lambda = 0");
        if (normalize_lambda) {
            push_step(chain, A, B, ScaleX{lambda});
            lambda = Scalar(1);
        }
        form = CaseJ1{lambda, B};
        break;
    }
    case JordanKind::J2: {
        Scalar a = A(0, 0);
        push_step(chain, A, B, ExpShift{Scalar(-1, 2) * a});
        Scalar c = A(0, 1);
        push_step(chain, A, B, ScaleX{c});
        form = CaseJ2{B};
        break;
    }
    case JordanKind::J3: {
        Scalar a = A(0, 0);
        push_step(chain, A, B, ExpShift{Scalar(-1, 2) * a});
        form = CaseJ3{B};
        break;
    }
    }

    if (!noncommute_guard(form))
        throw internal_inconsistency(
            "commutator test and Jordan branch disagree on commutativity");
    return CanonicalizeResult{form, chain};
}

bool noncommute_guard(const CanonicalForm& cf) {
    if (const auto* j1 = std::get_if<CaseJ1>(&cf)) {
        if (j1->lambda.is_zero()) return false;
        return !j1->B(0, 1).is_zero() || !j1->B(1, 0).is_zero();
    }
    if (const auto* j2 = std::get_if<CaseJ2>(&cf)) {
        const Mat2& b = j2->B;
        return !(b(0, 1) + b(1, 0)).is_zero() || !(b(1, 1) - b(0, 0)).is_zero();
    }
    if (const auto* j3 = std::get_if<CaseJ3>(&cf)) {
        const Mat2& b = j3->B;
        return !b(1, 0).is_zero() || !(b(1, 1) - b(0, 0)).is_zero();
    }
    throw internal_inconsistency("noncommute_guard called on the commuting branch");
}

std::pair<Mat2, Mat2> canonical_pair(const CanonicalForm& cf) {
    if (const auto* j1 = std::get_if<CaseJ1>(&cf))
        return {Mat2::diag(Scalar(0), Scalar(4) * j1->lambda), j1->B};
    if (const auto* j2 = std::get_if<CaseJ2>(&cf))
        return {Mat2(Scalar(0), Scalar(1), Scalar(-1), Scalar(0)), j2->B};
    if (const auto* j3 = std::get_if<CaseJ3>(&cf))
        return {Mat2(Scalar(0), Scalar(1), Scalar(0), Scalar(0)), j3->B};
    throw internal_inconsistency("canonical_pair called on the commuting branch");
}

} // namespace lieclass
