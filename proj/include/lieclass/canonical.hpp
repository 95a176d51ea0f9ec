#pragma once

#include <variant>

#include "lieclass/system.hpp"

namespace lieclass {

// Canonical branches: commuting systems reduce to y'' = M y; non-commuting
// ones land on A = diag(0, 4*lambda) (J1, lambda != 0), A = [[0,1],[-1,0]]
// (J2) or A = [[0,1],[0,0]] (J3) with B transformed along the chain.
struct Commuting { Mat2 M; };
struct CaseJ1 { Scalar lambda; Mat2 B; };
struct CaseJ2 { Mat2 B; };
struct CaseJ3 { Mat2 B; };

using CanonicalForm = std::variant<Commuting, CaseJ1, CaseJ2, CaseJ3>;

struct CanonicalizeResult {
    CanonicalForm form;
    TransformChain chain;
};

/// Drives a homogeneous pair to its canonical branch. The commuting branch
/// records an empty chain (its x-dependent reduction to M lies outside the
/// constant-step vocabulary); the others record the Jordan change, the
/// exponential shift that zeroes the diagonal, and for J2 the x-scaling that
/// sets c = 1. With normalize_lambda, a J1 form gets an extra ScaleX(lambda)
/// so the reported lambda is 1.
CanonicalizeResult canonicalize(const Mat2& A, const Mat2& B, bool normalize_lambda = false,
                                const mpz_class& ctx_d = 0);

/// True iff the branch commutator of the stored form is nonzero:
///   J1: 4*lambda*(b12 or b21) != 0,
///   J2: (b12+b21)^2 + (b22-b11)^2 != 0,
///   J3: b21^2 + (b22-b11)^2 != 0.
/// Precondition: cf is a non-commuting case.
bool noncommute_guard(const CanonicalForm& cf);

/// Canonical matrices of a non-commuting form: (diag(0,4l), B), (J2, B) or
/// (J3, B). Throws for the commuting branch, which keeps the input pair.
std::pair<Mat2, Mat2> canonical_pair(const CanonicalForm& cf);

} // namespace lieclass
