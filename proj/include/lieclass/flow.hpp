#pragma once

#include <array>
#include <vector>

#include "lieclass/system.hpp"
#include "lieclass/vectorfield.hpp"

namespace lieclass {

/// Uniform-grid numeric solution of the first-order form (y, z, y', z').
struct Trajectory {
    double x0 = 0.0;
    double h = 0.0;
    std::vector<std::array<double, 4>> nodes;

    double x_at(std::size_t i) const { return x0 + h * double(i); }
};

/// Classic RK4 on u'' = A u' + B u + f. Throws NonFiniteState on overflow.
Trajectory rk4_solve(const SystemSpec& sys, const std::array<double, 4>& init, double x0,
                     double x1, double h);
Trajectory rk4_solve(const Mat2& A, const Mat2& B, const std::array<double, 4>& init,
                     double x0, double x1, double h);

/// Transports traj through the one-parameter group of vf (first-prolongation
/// flow, RK4 in the group parameter), reinterprets the image as a curve over
/// the flowed grid, re-integrates the system from the flowed left endpoint,
/// and returns the max-norm discrepancy over (u, u'). Throws
/// NonMonotoneReparametrization when the flowed grid is not increasing.
double flow_check(const SystemSpec& sys, const VectorField& vf, double eps,
                  const Trajectory& traj);
double flow_check(const Mat2& A, const Mat2& B, const VectorField& vf, double eps,
                  const Trajectory& traj);

/// One point (x, y, z, y', z') moved by the group parameter eps (RK4 in eps).
std::array<double, 5> flow_point(const VectorField& vf, double eps,
                                 const std::array<double, 5>& state, int n_steps = 16);

} // namespace lieclass
