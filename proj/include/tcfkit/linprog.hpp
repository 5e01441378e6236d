#ifndef TCFKIT_LINPROG_HPP
#define TCFKIT_LINPROG_HPP

/**
 * Exact linear programming over Q.
 *
 * The solver is a two-phase revised simplex on the standard-form system
 * obtained after shifting bounds and splitting free variables.  Pivoting
 * uses Dantzig pricing and falls back to Bland's rule after a run of
 * degenerate steps, which keeps the usual speed while guaranteeing
 * termination.  Infeasible systems come back with a Farkas certificate
 * over the caller's rows and bounds; the certificate is re-verified
 * exactly before it is returned.
 */

#include "tcfkit/rational.hpp"

#include <optional>
#include <vector>

namespace tcfkit {

struct LinearProgram {
    enum class Sense { LE, GE, EQ };

    struct Row {
        std::vector<Rational> a;
        Sense sense = Sense::LE;
        Rational rhs = 0;
    };

    struct VarBounds {
        std::optional<Rational> lo;  // absent = unbounded below
        std::optional<Rational> hi;  // absent = unbounded above
    };

    std::size_t num_vars = 0;
    std::vector<Row> rows;
    /** Objective to maximize; leave empty for a pure feasibility problem. */
    std::vector<Rational> objective;
    /** Per-variable bounds; empty means every variable is free. */
    std::vector<VarBounds> bounds;

    void add_row(std::vector<Rational> a, Sense sense, Rational rhs) {
        rows.push_back(Row{std::move(a), sense, std::move(rhs)});
    }
};

/**
 * Infeasibility certificate.  The multipliers combine the rows and bound
 * constraints into the contradiction 0 <= c with c < 0:
 *
 *   sum_r row_mult[r]*a_r + sum_j (upper_mult[j] - lower_mult[j])*e_j = 0,
 *   sum_r row_mult[r]*rhs_r + sum_j upper_mult[j]*hi_j
 *                           - sum_j lower_mult[j]*lo_j < 0,
 *
 * with row_mult >= 0 on LE rows, <= 0 on GE rows, free on EQ rows, and
 * lower_mult, upper_mult >= 0 (zero wherever no such bound exists).
 */
struct FarkasCertificate {
    std::vector<Rational> row_mult;
    std::vector<Rational> lower_mult;
    std::vector<Rational> upper_mult;
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Optimal;
    /** Feasible (and optimal, when an objective was given) point. */
    std::vector<Rational> x;
    std::optional<Rational> objective_value;
    std::optional<FarkasCertificate> farkas;
};

/** Solve an LP exactly.  See LpResult for the outcome encoding. */
LpResult lp_solve(const LinearProgram& lp);

/** Exact check of a Farkas certificate against the program it came from. */
bool verify_farkas(const LinearProgram& lp, const FarkasCertificate& cert);

/** Outcome of a convex-hull membership test. */
struct ConvexHullMembership {
    bool inside = false;
    /** inside: convex coefficients over the input points (same order). */
    std::vector<Rational> lambda;
    /** outside: a hyperplane with a*p > b and a*y <= b for every input y. */
    std::vector<Rational> separator_a;
    Rational separator_b = 0;
};

/**
 * Decide whether p lies in the convex hull of `points`.
 *
 * Internally this solves the feasibility LP  { sum l_i y_i = p, sum l_i = 1,
 * l >= 0 }  with lazily generated columns: a small working subset of points
 * is kept, a Farkas separator of the subproblem is checked against the full
 * set, and violating points join the subset.  Exact throughout; the
 * returned separator is valid for every input point.
 *
 * @throws DimensionMismatch if the points do not all share p's dimension.
 */
ConvexHullMembership in_convex_hull(const std::vector<Rational>& p,
                                    const std::vector<std::vector<Rational>>& points);

}  // namespace tcfkit

#endif  // TCFKIT_LINPROG_HPP
