#pragma once

#include <array>
#include <string>
#include <vector>

#include "lieclass/canonical.hpp"
#include "lieclass/vectorfield.hpp"

namespace lieclass {

enum class Label {
    CommutingReducible,
    J1NoExtension,
    J1OneExtra,
    J1TwoExtra,
    J2NoExtension,
    J3NoExtension,
};

std::string label_name(Label l);

/// Branch quantities h1 = b11 + b22 + 2 lambda^2, h2 = b22 - b11 + 4 lambda^2.
struct HPair {
    Scalar h1;
    Scalar h2;
};

HPair h_values(const Mat2& B, const Scalar& lambda);

/// Left-hand sides of the six determining equations for the J1 ansatz
/// X = C1*Xbar1 + C2*X2, in the order: the cubic equation in the B-entries,
/// h1*h2*C1, the quadratic equation, C2*b21, (4 b22 + 15 lambda^2) C2,
/// (4 b11 - lambda^2) C2. All exact.
std::array<Scalar, 6> determining_residuals(const Mat2& B, const Scalar& lambda,
                                            const Scalar& C1, const Scalar& C2);

struct CoeffSpace {
    int dim = 0;
    bool C1_free = false;
    bool C2_free = false;
};

/// Rank analysis of the linear homogeneous system in (C1, C2): a coefficient
/// is free iff all of its determining forms vanish.
CoeffSpace solve_coeff_space(const Mat2& B, const Scalar& lambda);

/// The closed-form branch conditions: one extra generator iff b21 = 0 and
/// h2 = 0; two iff additionally 4 b22 + 15 lambda^2 = 0. Returns 0, 1 or 2.
int branch_extension_dim(const Mat2& B, const Scalar& lambda);

struct Classification {
    Label label;
    CanonicalForm form;              // final orientation
    TransformChain orientation_steps; // swap steps appended when the mirror
                                      // orientation carries the extension
    std::vector<VectorField> generators; // canonical coordinates
};

/// Labels a canonical form and lists its admitted generators (always the two
/// generic ones; X1/X2 for the J1 extension classes). For J1 both the
/// identity orientation and the y<->z swap are tried; the rank computation
/// and the closed-form branch conditions are cross-checked at runtime, and
/// every emitted generator must pass the exact admittance test.
Classification classify_canonical(const CanonicalForm& cf);

} // namespace lieclass
