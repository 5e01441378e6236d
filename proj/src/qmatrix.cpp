#include "tcfkit/qmatrix.hpp"

namespace tcfkit {

namespace {

/*
 * Clear denominators row by row.  Multiplying a row by a positive integer
 * changes neither the rank nor, if we remember the factors, the determinant.
 */
std::vector<std::vector<Integer>> to_integer_rows(const QMatrix& m, Integer& scale) {
    scale = 1;
    std::vector<std::vector<Integer>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m.at(i, j)));
        rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
        scale *= l;
    }
    return rows;
}

/*
 * Bareiss elimination on integer rows.  Returns the rank; if det is non-null
 * and the matrix is square, *det receives the determinant of the integer
 * matrix (sign of row swaps included).
 */
std::size_t bareiss(std::vector<std::vector<Integer>>& a, Integer* det) {
    const std::size_t nr = a.size();
    const std::size_t nc = nr ? a[0].size() : 0;
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                // Bareiss guarantees exact divisibility by the previous pivot.
                a[i][j] = t / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det) {
        if (r < nr)
            *det = 0;
        else
            *det = sign * prev;  // last pivot of full elimination is the determinant
    }
    return r;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Integer scale;
    auto rows = to_integer_rows(m, scale);
    return bareiss(rows, nullptr);
}

Rational determinant(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
    if (m.rows() == 0) return 1;
    Integer scale;
    auto rows = to_integer_rows(m, scale);
    Integer d;
    bareiss(rows, &d);
    return Rational(d) / Rational(scale);
}

namespace {

/*
 * Plain rational Gauss-Jordan; adequate for the small systems we solve
 * (margin equations, hypermetric reconstruction, certificate checks).
 * Returns reduced rows, pivot column per row in `pivots`.
 */
std::optional<std::vector<Rational>> gauss_solve(const QMatrix& a, const std::vector<Rational>& b,
                                                 bool require_square_nonsingular) {
    const std::size_t nr = a.rows(), nc = a.cols();
    if (b.size() != nr) throw DimensionMismatch("solve: rhs length mismatch");
    std::vector<std::vector<Rational>> w(nr, std::vector<Rational>(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) w[i][j] = a.at(i, j);
        w[i][nc] = b[i];
    }
    std::vector<long> pivot_col(nr, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && w[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(w[piv], w[r]);
        Rational inv = 1 / w[r][c];
        for (std::size_t j = c; j <= nc; ++j) w[r][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rational f = w[i][c];
            for (std::size_t j = c; j <= nc; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col[r] = (long)c;
        ++r;
    }
    if (require_square_nonsingular && (nr != nc || r != nc)) return std::nullopt;
    // consistency: a zero row with nonzero rhs kills it
    for (std::size_t i = r; i < nr; ++i)
        if (w[i][nc] != 0) return std::nullopt;
    std::vector<Rational> x(nc, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[(std::size_t)pivot_col[i]] = w[i][nc];
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
    return gauss_solve(a, b, true);
}

std::optional<std::vector<Rational>> solve_consistent(const QMatrix& a,
                                                      const std::vector<Rational>& b) {
    return gauss_solve(a, b, false);
}

}  // namespace tcfkit
