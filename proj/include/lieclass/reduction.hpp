#pragma once

#include "lieclass/matexp.hpp"
#include "lieclass/system.hpp"

namespace lieclass {

struct HomogenizeResult {
    Mat2 A;
    Mat2 B;
    TransformChain chain; // empty, or one ParticularShift
    PolyVec y_p;          // the particular solution used (empty when f = 0)
};

/// Removes a constant inhomogeneity with a polynomial particular solution of
/// minimal degree <= 3 (exact ansatz, Gaussian elimination). Throws
/// NoPolynomialParticularSolution when no such polynomial exists.
HomogenizeResult homogenize(const SystemSpec& sys);

/// AB = BA, exactly.
bool commute_test(const Mat2& A, const Mat2& B);

/// M = B + (1/4) A^2, valid when A and B commute (then C = e^(xA/2) commutes
/// with B + A^2/4 and the reduced system is y'' = M y). Throws NotCommuting.
Mat2 reduce_to_M(const Mat2& A, const Mat2& B);

/// Numeric shadow B_bar(t) = C(t)^-1 (B + A^2/4) C(t), C(t) = e^(tA/2).
/// Constant in t iff A and B commute.
DMat2 bbar_of_t(const Mat2& A, const Mat2& B, double t);

/// Exact Gaussian elimination; returns false when the system is
/// inconsistent. Underdetermined systems get free variables set to zero.
bool solve_linear(std::vector<std::vector<Scalar>> M, std::vector<Scalar> rhs,
                  std::vector<Scalar>& sol);

} // namespace lieclass
