#pragma once

#include <optional>

#include "lieclass/mat2.hpp"

namespace lieclass {

enum class JordanKind { J1, J2, J3 };

/// J = P * A * P^-1 computed exactly.
///   J1: diag(a, b), real eigenvalues (a = b only for an already-diagonal A);
///   J2: [[a, c], [-c, a]] with c > 0 (complex pair a +- i c);
///   J3: [[a, 1], [0, a]] (defective).
struct JordanResult {
    JordanKind kind;
    Mat2 J;
    Mat2 P;
    Scalar a;
    std::optional<Scalar> b; // J1 second eigenvalue
    std::optional<Scalar> c; // J2 imaginary part, > 0
};

/// Real Jordan form of a 2x2 matrix over Q(sqrt(d)). An already-diagonal A is
/// returned as-is with P = I; otherwise a J1 pair is ordered descending,
/// a = (tr + sqrt(D))/2. ctx_d, when nonzero, pins the quadratic extension a
/// non-rational eigenvalue computation is allowed to introduce; a mismatch
/// throws UnsupportedDiscriminant.
JordanResult real_jordan(const Mat2& A, const mpz_class& ctx_d = 0);

} // namespace lieclass
