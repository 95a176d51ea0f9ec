#include "lieclass/reduction.hpp"

#include "lieclass/errors.hpp"

namespace lieclass {

bool solve_linear(std::vector<std::vector<Scalar>> M, std::vector<Scalar> rhs,
                  std::vector<Scalar>& sol) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    std::vector<std::size_t> pivot_col(rows, cols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        std::swap(rhs[p], rhs[r]);
        Scalar inv = M[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) M[r][j] = inv * M[r][j];
        rhs[r] = inv * rhs[r];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            Scalar factor = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= factor * M[r][j];
            rhs[i] -= factor * rhs[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return false;
    sol.assign(cols, Scalar(0));
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = rhs[i];
    return true;
}

HomogenizeResult homogenize(const SystemSpec& sys) {
    HomogenizeResult out;
    out.A = sys.A;
    out.B = sys.B;
    if (sys.f.is_zero()) return out;

    // Ansatz y_p = sum_{i<=D} c_i x^i; coefficient of x^i in
    // y_p'' - A y_p' - B y_p = f reads
    //   (i+2)(i+1) c_{i+2} - (i+1) A c_{i+1} - B c_i = f*delta_{i,0}.
    for (unsigned degree = 0; degree <= 3; ++degree) {
        const unsigned n = degree + 1;          // vector coefficients
        const std::size_t dim = 2 * n;          // scalar unknowns
        std::vector<std::vector<Scalar>> M(dim, std::vector<Scalar>(dim, Scalar(0)));
        std::vector<Scalar> rhs(dim, Scalar(0));
        auto put_block = [&](std::size_t eq, std::size_t var, const Mat2& blk, long scale) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    M[2 * eq + i][2 * var + j] += Scalar(scale) * blk(i, j);
        };
        for (unsigned i = 0; i < n; ++i) {
            if (i + 2 < n)
                put_block(i, i + 2, Mat2::identity(), long(i + 2) * long(i + 1));
            if (i + 1 < n) put_block(i, i + 1, sys.A, -long(i + 1));
            put_block(i, i, sys.B, -1);
        }
        rhs[0] = sys.f.x;
        rhs[1] = sys.f.y;

        std::vector<Scalar> sol;
        if (!solve_linear(M, rhs, sol)) continue;

        PolyVec yp;
        for (unsigned i = 0; i < n; ++i) yp.coeffs.push_back(Vec2(sol[2 * i], sol[2 * i + 1]));
        while (!yp.coeffs.empty() && yp.coeffs.back().is_zero()) yp.coeffs.pop_back();
        out.y_p = yp;
        out.chain.push_back(ParticularShift{yp});
        return out;
    }
    throw Error(ErrorKind::NoPolynomialParticularSolution,
                "no polynomial particular solution of degree <= 3");
}

bool commute_test(const Mat2& A, const Mat2& B) { return commutator(A, B).is_zero(); }

Mat2 reduce_to_M(const Mat2& A, const Mat2& B) {
    if (!commute_test(A, B))
        throw Error(ErrorKind::NotCommuting, "A and B do not commute");
    return B + Scalar(1, 4) * (A * A);
}

DMat2 bbar_of_t(const Mat2& A, const Mat2& B, double t) {
    Mat2 K = B + Scalar(1, 4) * (A * A);
    DMat2 C = mat_exp_numeric(A, t / 2.0);
    DMat2 Cinv = mat_exp_numeric(A, -t / 2.0);
    return Cinv * DMat2::from(K) * C;
}

} // namespace lieclass
