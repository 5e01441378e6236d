#include "tcfkit/linprog.hpp"

#include "tcfkit/qmatrix.hpp"

#include <algorithm>
#include <cassert>

namespace tcfkit {

namespace {

using Sense = LinearProgram::Sense;

/* Column index space: real columns first, then one artificial per row. */
struct SparseCol {
    std::vector<std::pair<std::size_t, Rational>> entries;
};

struct StandardForm {
    std::size_t m = 0;
    std::vector<SparseCol> cols;
    std::vector<Rational> rhs;    // >= 0 after orientation fixes
    std::vector<Rational> cost;   // phase-2 objective, to minimize

    // Per-variable transform x_j = shift + dir*u[pos] (dir=+1/-1), or
    // x_j = u[pos] - u[neg] for free variables.
    struct VarMap {
        long pos = -1, neg = -1;
        Rational shift = 0;
        int dir = 1;
    };
    std::vector<VarMap> vmap;

    // Row bookkeeping for Farkas mapping.  kind 0: API row, kind 1: the
    // synthetic row x_j <= hi_j of a doubly bounded variable.
    struct RowMap {
        int kind = 0;
        std::size_t index = 0;  // API row index or variable index
        int rho = 1;            // -1 when a GE row was flipped to LE
        int tau = 1;            // -1 when the row was negated to make rhs >= 0
        long slack_col = -1;
    };
    std::vector<RowMap> rmap;
};

/*
 * Revised simplex with an explicitly maintained basis inverse.  Dantzig
 * pricing normally; after `kDegenerateLimit` consecutive degenerate pivots
 * we run Bland's least-index rule until a strict improvement happens, so
 * cycling is impossible.
 */
class Simplex {
  public:
    explicit Simplex(const StandardForm& sf)
        : sf_(sf), m_(sf.m), n_(sf.cols.size()) {
        basis_.resize(m_);
        binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
        xb_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;  // artificial
            binv_[i][i] = 1;
            xb_[i] = sf_.rhs[i];
        }
    }

    /** Phase 1; returns the artificial optimum (0 iff feasible). */
    Rational phase1() {
        phase_ = 1;
        run();
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) v += xb_[i];
        return v;
    }

    void phase2() {
        phase_ = 2;
        run();
    }

    bool unbounded() const { return unbounded_; }

    /** Values of the structural (non-artificial) variables. */
    std::vector<Rational> solution() const {
        std::vector<Rational> u(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) u[basis_[i]] = xb_[i];
        return u;
    }

    /** Duals y = c_B B^-1 of the current (final) basis for the phase cost. */
    std::vector<Rational> duals() const {
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            Rational cb = basic_cost(basis_[i]);
            if (cb == 0) continue;
            for (std::size_t k = 0; k < m_; ++k) y[k] += cb * binv_[i][k];
        }
        return y;
    }

  private:
    static constexpr int kDegenerateLimit = 25;

    Rational basic_cost(std::size_t col) const {
        if (phase_ == 1) return col >= n_ ? Rational(1) : Rational(0);
        return col >= n_ ? Rational(0) : sf_.cost[col];
    }

    Rational column_cost(std::size_t col) const { return basic_cost(col); }

    Rational reduced_cost(std::size_t col, const std::vector<Rational>& y) const {
        Rational rc = column_cost(col);
        if (col >= n_) {
            rc -= y[col - n_];
        } else {
            for (const auto& [r, v] : sf_.cols[col].entries) rc -= y[r] * v;
        }
        return rc;
    }

    std::vector<Rational> direction(std::size_t col) const {
        std::vector<Rational> d(m_, Rational(0));
        if (col >= n_) {
            std::size_t r0 = col - n_;
            for (std::size_t i = 0; i < m_; ++i) d[i] = binv_[i][r0];
            return d;
        }
        for (const auto& [r, v] : sf_.cols[col].entries)
            for (std::size_t i = 0; i < m_; ++i) d[i] += binv_[i][r] * v;
        return d;
    }

    void run() {
        int degenerate_streak = 0;
        bool bland = false;
        unbounded_ = false;
        std::vector<bool> is_basic(n_ + m_, false);
        for (std::size_t b : basis_) is_basic[b] = true;

        for (;;) {
            std::vector<Rational> y = duals();

            // entering column
            long enter = -1;
            Rational best = 0;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (is_basic[j]) continue;
                if (phase_ == 2 && j >= n_) continue;  // artificials stay out
                Rational rc = reduced_cost(j, y);
                if (rc < 0) {
                    if (bland) {
                        enter = (long)j;
                        break;
                    }
                    if (enter < 0 || rc < best) {
                        enter = (long)j;
                        best = rc;
                    }
                }
            }
            if (enter < 0) return;  // optimal for this phase

            std::vector<Rational> d = direction((std::size_t)enter);

            // ratio test; in phase 2 basic artificials are pushed out first
            // (their value is 0, so pivoting on either sign keeps feasibility)
            long leave = -1;
            Rational theta = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                bool artificial_basic = basis_[i] >= n_;
                bool eligible = d[i] > 0 || (phase_ == 2 && artificial_basic && d[i] != 0);
                if (!eligible) continue;
                Rational ratio = artificial_basic && d[i] < 0 ? Rational(0) : xb_[i] / d[i];
                if (leave < 0 || ratio < theta ||
                    (ratio == theta && basis_[i] < basis_[(std::size_t)leave])) {
                    leave = (long)i;
                    theta = ratio;
                }
            }
            if (leave < 0) {
                unbounded_ = true;
                return;
            }

            if (theta == 0) {
                if (++degenerate_streak >= kDegenerateLimit) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }

            pivot((std::size_t)leave, (std::size_t)enter, d, theta);
            is_basic[basis_[(std::size_t)leave]] = false;
            is_basic[(std::size_t)enter] = true;
            basis_[(std::size_t)leave] = (std::size_t)enter;
        }
    }

    void pivot(std::size_t r, std::size_t /*enter*/, const std::vector<Rational>& d,
               const Rational& theta) {
        Rational inv = 1 / d[r];
        for (std::size_t k = 0; k < m_; ++k) binv_[r][k] *= inv;
        xb_[r] = theta;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || d[i] == 0) continue;
            for (std::size_t k = 0; k < m_; ++k) binv_[i][k] -= d[i] * binv_[r][k];
            xb_[i] -= d[i] * theta;
        }
    }

    const StandardForm& sf_;
    std::size_t m_, n_;
    int phase_ = 1;
    bool unbounded_ = false;
    std::vector<std::size_t> basis_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
};

StandardForm build_standard_form(const LinearProgram& lp) {
    StandardForm sf;
    const std::size_t nv = lp.num_vars;
    sf.vmap.resize(nv);

    auto bound_of = [&](std::size_t j) -> LinearProgram::VarBounds {
        if (lp.bounds.empty()) return {};
        return lp.bounds[j];
    };

    // variables
    for (std::size_t j = 0; j < nv; ++j) {
        auto b = bound_of(j);
        auto& vm = sf.vmap[j];
        if (b.lo && b.hi) {
            vm.pos = (long)sf.cols.size();
            sf.cols.emplace_back();
            vm.shift = *b.lo;
            vm.dir = 1;
        } else if (b.lo) {
            vm.pos = (long)sf.cols.size();
            sf.cols.emplace_back();
            vm.shift = *b.lo;
            vm.dir = 1;
        } else if (b.hi) {
            vm.pos = (long)sf.cols.size();
            sf.cols.emplace_back();
            vm.shift = *b.hi;
            vm.dir = -1;
        } else {
            vm.pos = (long)sf.cols.size();
            sf.cols.emplace_back();
            vm.neg = (long)sf.cols.size();
            sf.cols.emplace_back();
        }
    }

    auto add_internal_row = [&](const std::vector<std::pair<std::size_t, Rational>>& xcoeffs,
                                Sense sense, Rational rhs, int kind, std::size_t index) {
        // substitute the variable transforms
        std::size_t row = sf.m;
        StandardForm::RowMap rm;
        rm.kind = kind;
        rm.index = index;
        rm.rho = sense == Sense::GE ? -1 : 1;
        Rational b = rhs * rm.rho;
        std::vector<std::pair<std::size_t, Rational>> ucoeffs;
        for (const auto& [j, aj] : xcoeffs) {
            if (aj == 0) continue;
            const auto& vm = sf.vmap[j];
            Rational c = aj * rm.rho;
            b -= c * vm.shift;
            ucoeffs.emplace_back((std::size_t)vm.pos, c * vm.dir);
            if (vm.neg >= 0) ucoeffs.emplace_back((std::size_t)vm.neg, -c);
        }
        rm.tau = b < 0 ? -1 : 1;
        if (rm.tau < 0) b = -b;
        for (auto& [cidx, v] : ucoeffs) {
            v *= rm.tau;
            sf.cols[cidx].entries.emplace_back(row, v);
        }
        if (sense != Sense::EQ) {
            rm.slack_col = (long)sf.cols.size();
            sf.cols.emplace_back();
            sf.cols.back().entries.emplace_back(row, Rational(rm.tau));
        }
        sf.rhs.push_back(b);
        sf.rmap.push_back(rm);
        ++sf.m;
    };

    // synthetic upper-bound rows for doubly bounded variables
    for (std::size_t j = 0; j < nv; ++j) {
        auto b = bound_of(j);
        if (b.lo && b.hi)
            add_internal_row({{j, Rational(1)}}, Sense::LE, *b.hi, 1, j);
    }

    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const auto& row = lp.rows[r];
        if (row.a.size() != nv) throw DimensionMismatch("lp row length != num_vars");
        std::vector<std::pair<std::size_t, Rational>> xc;
        for (std::size_t j = 0; j < nv; ++j)
            if (row.a[j] != 0) xc.emplace_back(j, row.a[j]);
        add_internal_row(xc, row.sense, row.rhs, 0, r);
    }

    // phase-2 cost: minimize -objective in u space (constant shift ignored)
    sf.cost.assign(sf.cols.size(), Rational(0));
    if (!lp.objective.empty()) {
        for (std::size_t j = 0; j < nv; ++j) {
            const Rational& cj = lp.objective[j];
            if (cj == 0) continue;
            const auto& vm = sf.vmap[j];
            sf.cost[(std::size_t)vm.pos] -= cj * vm.dir;
            if (vm.neg >= 0) sf.cost[(std::size_t)vm.neg] += cj;
        }
    }
    return sf;
}

FarkasCertificate extract_farkas(const LinearProgram& lp, const StandardForm& sf,
                                 const std::vector<Rational>& y_phase1) {
    // yhat = -y satisfies yhat^T A >= 0 on structural columns, yhat^T b < 0.
    FarkasCertificate cert;
    cert.row_mult.assign(lp.rows.size(), Rational(0));
    cert.lower_mult.assign(lp.num_vars, Rational(0));
    cert.upper_mult.assign(lp.num_vars, Rational(0));

    std::vector<Rational> bound_row_mult(lp.num_vars, Rational(0));
    for (std::size_t i = 0; i < sf.m; ++i) {
        Rational mult = -y_phase1[i] * sf.rmap[i].tau * sf.rmap[i].rho;
        if (sf.rmap[i].kind == 0)
            cert.row_mult[sf.rmap[i].index] = mult;
        else
            bound_row_mult[sf.rmap[i].index] = mult;  // row x_j <= hi_j
    }

    // column conditions give the bound multipliers
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        Rational w = 0;
        for (std::size_t r = 0; r < lp.rows.size(); ++r)
            if (cert.row_mult[r] != 0 && lp.rows[r].a[j] != 0)
                w += cert.row_mult[r] * lp.rows[r].a[j];
        auto b = lp.bounds.empty() ? LinearProgram::VarBounds{} : lp.bounds[j];
        if (b.lo && b.hi) {
            cert.upper_mult[j] = bound_row_mult[j];
            cert.lower_mult[j] = w + bound_row_mult[j];
        } else if (b.lo) {
            cert.lower_mult[j] = w;
        } else if (b.hi) {
            cert.upper_mult[j] = -w;
        }
    }
    return cert;
}

}  // namespace

bool verify_farkas(const LinearProgram& lp, const FarkasCertificate& cert) {
    if (cert.row_mult.size() != lp.rows.size()) return false;
    if (cert.lower_mult.size() != lp.num_vars || cert.upper_mult.size() != lp.num_vars)
        return false;
    // sign conditions
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (lp.rows[r].sense == Sense::LE && cert.row_mult[r] < 0) return false;
        if (lp.rows[r].sense == Sense::GE && cert.row_mult[r] > 0) return false;
    }
    Rational total = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r)
        total += cert.row_mult[r] * lp.rows[r].rhs;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        auto b = lp.bounds.empty() ? LinearProgram::VarBounds{} : lp.bounds[j];
        if (cert.lower_mult[j] < 0 || cert.upper_mult[j] < 0) return false;
        if (cert.lower_mult[j] != 0 && !b.lo) return false;
        if (cert.upper_mult[j] != 0 && !b.hi) return false;
        if (b.lo) total -= cert.lower_mult[j] * *b.lo;
        if (b.hi) total += cert.upper_mult[j] * *b.hi;
        // combined coefficient of x_j must cancel
        Rational w = cert.upper_mult[j] - cert.lower_mult[j];
        for (std::size_t r = 0; r < lp.rows.size(); ++r)
            if (cert.row_mult[r] != 0) w += cert.row_mult[r] * lp.rows[r].a[j];
        if (w != 0) return false;
    }
    return total < 0;
}

LpResult lp_solve(const LinearProgram& lp) {
    // inverted explicit bounds short-circuit to an obvious certificate
    if (!lp.bounds.empty()) {
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            const auto& b = lp.bounds[j];
            if (b.lo && b.hi && *b.lo > *b.hi) {
                LpResult res;
                res.status = LpResult::Status::Infeasible;
                FarkasCertificate cert;
                cert.row_mult.assign(lp.rows.size(), Rational(0));
                cert.lower_mult.assign(lp.num_vars, Rational(0));
                cert.upper_mult.assign(lp.num_vars, Rational(0));
                cert.lower_mult[j] = 1;
                cert.upper_mult[j] = 1;
                res.farkas = cert;
                return res;
            }
        }
    }

    StandardForm sf = build_standard_form(lp);
    Simplex splx(sf);
    Rational art = splx.phase1();
    LpResult res;
    if (art > 0) {
        res.status = LpResult::Status::Infeasible;
        FarkasCertificate cert = extract_farkas(lp, sf, splx.duals());
        if (!verify_farkas(lp, cert))
            throw std::logic_error("internal error: Farkas certificate failed verification");
        res.farkas = std::move(cert);
        return res;
    }
    if (!lp.objective.empty()) {
        splx.phase2();
        if (splx.unbounded()) {
            res.status = LpResult::Status::Unbounded;
            return res;
        }
    }
    std::vector<Rational> u = splx.solution();
    res.status = LpResult::Status::Optimal;
    res.x.assign(lp.num_vars, Rational(0));
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        const auto& vm = sf.vmap[j];
        res.x[j] = vm.shift + Rational(vm.dir) * u[(std::size_t)vm.pos];
        if (vm.neg >= 0) res.x[j] -= u[(std::size_t)vm.neg];
    }
    if (!lp.objective.empty()) {
        Rational obj = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) obj += lp.objective[j] * res.x[j];
        res.objective_value = obj;
    }
    return res;
}

ConvexHullMembership in_convex_hull(const std::vector<Rational>& p,
                                    const std::vector<std::vector<Rational>>& points) {
    const std::size_t d = p.size();
    for (const auto& y : points)
        if (y.size() != d) throw DimensionMismatch("in_convex_hull: point dimension mismatch");

    ConvexHullMembership out;
    if (points.empty()) {
        out.inside = false;
        out.separator_a.assign(d, Rational(0));
        out.separator_b = -1;  // 0 > -1 separates p from nothing at all
        return out;
    }

    // lazily grown working subset
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < points.size() && i < d + 2; ++i) work.push_back(i);

    for (std::size_t round = 0; round <= points.size() + 1; ++round) {
        LinearProgram lp;
        lp.num_vars = work.size();
        lp.bounds.assign(work.size(), {Rational(0), std::nullopt});
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<Rational> a(work.size());
            for (std::size_t w = 0; w < work.size(); ++w) a[w] = points[work[w]][k];
            lp.add_row(std::move(a), Sense::EQ, p[k]);
        }
        lp.add_row(std::vector<Rational>(work.size(), Rational(1)), Sense::EQ, Rational(1));

        LpResult res = lp_solve(lp);
        if (res.status == LpResult::Status::Optimal) {
            out.inside = true;
            out.lambda.assign(points.size(), Rational(0));
            for (std::size_t w = 0; w < work.size(); ++w) out.lambda[work[w]] = res.x[w];
            return out;
        }

        // Farkas multipliers on the d coordinate rows and the sum row give a
        // hyperplane separating p from the working subset; check it globally.
        const auto& mu = res.farkas->row_mult;
        std::vector<Rational> h(d);
        for (std::size_t k = 0; k < d; ++k) h[k] = -mu[k];
        Rational t = mu[d];

        long worst = -1;
        Rational worst_excess = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Rational v = -t;
            for (std::size_t k = 0; k < d; ++k) v += h[k] * points[i][k];
            if (v > worst_excess) {
                worst_excess = v;
                worst = (long)i;
            }
        }
        if (worst < 0) {
            out.inside = false;
            // scale to a primitive integer form for stable output
            Integer l = 1;
            for (const Rational& c : h) l = lcm(l, den(c));
            l = lcm(l, den(t));
            Integer g = 0;
            for (Rational& c : h) {
                c *= l;
                g = gcd(g, num(c));
            }
            t *= l;
            g = gcd(g, num(t));
            if (g != 0)
                for (Rational& c : h) c /= g;
            if (g != 0) t /= g;
            out.separator_a = std::move(h);
            out.separator_b = t;
            return out;
        }
        work.push_back((std::size_t)worst);
    }
    throw std::logic_error("in_convex_hull: column generation failed to terminate");
}

}  // namespace tcfkit
