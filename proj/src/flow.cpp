#include "lieclass/flow.hpp"

#include <cmath>

#include "lieclass/errors.hpp"

namespace lieclass {

namespace {

struct DSys {
    double A[2][2];
    double B[2][2];
    double f[2];

    explicit DSys(const SystemSpec& s) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                A[i][j] = s.A(i, j).to_double();
                B[i][j] = s.B(i, j).to_double();
            }
        f[0] = s.f.x.to_double();
        f[1] = s.f.y.to_double();
    }

    std::array<double, 4> rhs(const std::array<double, 4>& s) const {
        return {s[2], s[3],
                A[0][0] * s[2] + A[0][1] * s[3] + B[0][0] * s[0] + B[0][1] * s[1] + f[0],
                A[1][0] * s[2] + A[1][1] * s[3] + B[1][0] * s[0] + B[1][1] * s[1] + f[1]};
    }
};

template <std::size_t N, typename F>
std::array<double, N> rk4_step(const F& rhs, const std::array<double, N>& s, double h) {
    auto k1 = rhs(s);
    std::array<double, N> t;
    for (std::size_t i = 0; i < N; ++i) t[i] = s[i] + 0.5 * h * k1[i];
    auto k2 = rhs(t);
    for (std::size_t i = 0; i < N; ++i) t[i] = s[i] + 0.5 * h * k2[i];
    auto k3 = rhs(t);
    for (std::size_t i = 0; i < N; ++i) t[i] = s[i] + h * k3[i];
    auto k4 = rhs(t);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

// Flattened term list for fast repeated evaluation inside RK4 stages.
struct CompiledPoly {
    struct T {
        double c, mu, theta;
        unsigned k;
    };
    std::vector<T> ts;

    explicit CompiledPoly(const ExpPoly& p) {
        for (const auto& t : p.terms())
            ts.push_back({t.c.to_double(), t.mu.to_double(), t.theta.to_double(), t.k});
    }
    double eval(double x) const {
        double acc = 0.0;
        for (const auto& t : ts) {
            double pw = 1.0;
            for (unsigned i = 0; i < t.k; ++i) pw *= x;
            acc += t.c * pw * std::exp(t.mu * x + t.theta);
        }
        return acc;
    }
};

struct CompiledField {
    CompiledPoly xi, xi1;
    CompiledPoly M[2][2], M1[2][2];
    CompiledPoly v[2], v1[2];

    explicit CompiledField(const VectorField& f)
        : xi(f.xi),
          xi1(f.xi.derivative()),
          M{{CompiledPoly(f.M[0][0]), CompiledPoly(f.M[0][1])},
            {CompiledPoly(f.M[1][0]), CompiledPoly(f.M[1][1])}},
          M1{{CompiledPoly(f.M[0][0].derivative()), CompiledPoly(f.M[0][1].derivative())},
             {CompiledPoly(f.M[1][0].derivative()), CompiledPoly(f.M[1][1].derivative())}},
          v{CompiledPoly(f.v[0]), CompiledPoly(f.v[1])},
          v1{CompiledPoly(f.v[0].derivative()), CompiledPoly(f.v[1].derivative())} {}

    // Prolonged flow on (x, y, z, y', z'): the group parameter moves x by xi,
    // u by M u + v, and u' by its first prolongation M' u + M u' + v' - xi' u'.
    std::array<double, 5> rhs(const std::array<double, 5>& s) const {
        double x = s[0];
        double m00 = M[0][0].eval(x), m01 = M[0][1].eval(x);
        double m10 = M[1][0].eval(x), m11 = M[1][1].eval(x);
        double d00 = M1[0][0].eval(x), d01 = M1[0][1].eval(x);
        double d10 = M1[1][0].eval(x), d11 = M1[1][1].eval(x);
        double xp = xi1.eval(x);
        return {xi.eval(x),
                m00 * s[1] + m01 * s[2] + v[0].eval(x),
                m10 * s[1] + m11 * s[2] + v[1].eval(x),
                d00 * s[1] + d01 * s[2] + m00 * s[3] + m01 * s[4] + v1[0].eval(x) - xp * s[3],
                d10 * s[1] + d11 * s[2] + m10 * s[3] + m11 * s[4] + v1[1].eval(x) - xp * s[4]};
    }
};

} // namespace

Trajectory rk4_solve(const SystemSpec& sys, const std::array<double, 4>& init, double x0,
                     double x1, double h) {
    if (!(h > 0.0) || !(x1 > x0))
        throw internal_inconsistency("rk4_solve needs h > 0 and x1 > x0");
    DSys d(sys);
    Trajectory traj;
    traj.x0 = x0;
    traj.h = h;
    auto n = static_cast<std::size_t>(std::llround((x1 - x0) / h));
    traj.nodes.reserve(n + 1);
    std::array<double, 4> s = init;
    traj.nodes.push_back(s);
    auto rhs = [&](const std::array<double, 4>& u) { return d.rhs(u); };
    for (std::size_t i = 0; i < n; ++i) {
        s = rk4_step(rhs, s, h);
        for (double c : s)
            if (!std::isfinite(c))
                throw Error(ErrorKind::NonFiniteState, "trajectory left the finite range");
        traj.nodes.push_back(s);
    }
    return traj;
}

Trajectory rk4_solve(const Mat2& A, const Mat2& B, const std::array<double, 4>& init,
                     double x0, double x1, double h) {
    return rk4_solve(SystemSpec{A, B, Vec2(Scalar(0), Scalar(0)), 0}, init, x0, x1, h);
}

double flow_check(const SystemSpec& sys, const VectorField& vf, double eps,
                  const Trajectory& traj) {
    if (traj.nodes.size() < 2)
        throw internal_inconsistency("flow check needs at least two trajectory nodes");
    CompiledField cf(vf);
    const int n_eps = 16;
    double ds = eps / n_eps;
    auto rhs = [&](const std::array<double, 5>& s) { return cf.rhs(s); };

    std::vector<std::array<double, 5>> flowed;
    flowed.reserve(traj.nodes.size());
    for (std::size_t i = 0; i < traj.nodes.size(); ++i) {
        std::array<double, 5> s{traj.x_at(i), traj.nodes[i][0], traj.nodes[i][1],
                                traj.nodes[i][2], traj.nodes[i][3]};
        for (int k = 0; k < n_eps; ++k) s = rk4_step(rhs, s, ds);
        for (double c : s)
            if (!std::isfinite(c))
                throw Error(ErrorKind::NonFiniteState, "group flow left the finite range");
        flowed.push_back(s);
    }

    for (std::size_t i = 1; i < flowed.size(); ++i)
        if (!(flowed[i][0] > flowed[i - 1][0]))
            throw Error(ErrorKind::NonMonotoneReparametrization,
                        "flowed grid is not strictly increasing");

    // Re-integrate from the flowed left endpoint and compare node by node.
    DSys d(sys);
    auto sys_rhs = [&](const std::array<double, 4>& u) { return d.rhs(u); };
    std::array<double, 4> s{flowed[0][1], flowed[0][2], flowed[0][3], flowed[0][4]};
    double worst = 0.0;
    for (std::size_t i = 1; i < flowed.size(); ++i) {
        double span = flowed[i][0] - flowed[i - 1][0];
        int sub = std::max(1, int(std::ceil(span / traj.h)));
        double hh = span / sub;
        for (int k = 0; k < sub; ++k) s = rk4_step(sys_rhs, s, hh);
        // The image curve is compared as a function y_bar(x_bar): u only.
        for (int c = 0; c < 2; ++c)
            worst = std::max(worst, std::abs(s[c] - flowed[i][c + 1]));
    }
    return worst;
}

double flow_check(const Mat2& A, const Mat2& B, const VectorField& vf, double eps,
                  const Trajectory& traj) {
    return flow_check(SystemSpec{A, B, Vec2(Scalar(0), Scalar(0)), 0}, vf, eps, traj);
}

std::array<double, 5> flow_point(const VectorField& vf, double eps,
                                 const std::array<double, 5>& state, int n_steps) {
    CompiledField cf(vf);
    auto rhs = [&](const std::array<double, 5>& s) { return cf.rhs(s); };
    std::array<double, 5> s = state;
    double ds = eps / n_steps;
    for (int k = 0; k < n_steps; ++k) s = rk4_step(rhs, s, ds);
    return s;
}

} // namespace lieclass
