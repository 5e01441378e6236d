#ifndef TCFKIT_QMATRIX_HPP
#define TCFKIT_QMATRIX_HPP

/**
 * Dense rational matrices plus the handful of exact linear-algebra
 * routines the rest of the library needs: rank and determinant by
 * fraction-free Bareiss elimination, and a plain Gaussian solver for
 * small square systems.
 */

#include "tcfkit/rational.hpp"

#include <optional>
#include <vector>

namespace tcfkit {

class DimensionMismatch : public std::runtime_error {
  public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/** Row-major dense matrix over Q. */
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /** Append a row; its length must match cols() unless the matrix is empty. */
    void append_row(const std::vector<Rational>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_)
            throw DimensionMismatch("append_row: expected " + std::to_string(cols_) +
                                    " entries, got " + std::to_string(row.size()));
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<Rational> row(std::size_t i) const {
        return std::vector<Rational>(data_.begin() + (long)(i * cols_),
                                     data_.begin() + (long)((i + 1) * cols_));
    }

    bool operator==(const QMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/**
 * Rank over Q via Bareiss elimination.  Rows are scaled to integers first
 * (rank is invariant), then the integer variant runs without fractions.
 */
std::size_t rank(const QMatrix& m);

/**
 * Determinant of a square matrix, exact.
 * @throws DimensionMismatch if the matrix is not square.
 */
Rational determinant(const QMatrix& m);

/**
 * Solve A x = b for square nonsingular A.
 * @returns the unique solution, or std::nullopt if A is singular
 *          (regardless of whether the singular system happens to be
 *          consistent; callers that care use solve_consistent).
 */
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);

/**
 * Solve A x = b for arbitrary A (least structure assumed).
 * @returns some solution if the system is consistent, std::nullopt otherwise.
 */
std::optional<std::vector<Rational>> solve_consistent(const QMatrix& a,
                                                      const std::vector<Rational>& b);

}  // namespace tcfkit

#endif  // TCFKIT_QMATRIX_HPP
