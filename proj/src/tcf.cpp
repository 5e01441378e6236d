#include "tcfkit/tcf.hpp"

#include "tcfkit/linprog.hpp"
#include "tcfkit/qmatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace tcfkit::tcf {

namespace {

using combinat::full_mask;
using combinat::popcount;

Subset bit(int i) { return Subset(1) << (i - 1); }

Integer vector_gcd(const std::vector<Integer>& v, const Integer& extra) {
    Integer g = abs(extra);
    for (const Integer& e : v) g = gcd(g, e);
    return g;
}

/** Scale a rational vector to primitive integers (gcd 1, first nonzero > 0). */
std::vector<Integer> primitive_integer_direction(const std::vector<Rational>& v) {
    Integer scale = 1;
    for (const Rational& r : v) scale = lcm(scale, den(r));
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = num(v[i] * Rational(scale));
    Integer g = vector_gcd(out, 0);
    if (g == 0) return out;
    for (Integer& e : out) e /= g;
    for (const Integer& e : out) {
        if (e != 0) {
            if (e < 0)
                for (Integer& f : out) f = -f;
            break;
        }
    }
    return out;
}

}  // namespace

TcfPoint::TcfPoint(int n_, std::vector<Rational> chi_) : n(n_), chi(std::move(chi_)) {
    if (n < 1) throw BadPoint("TcfPoint needs n >= 1");
    if (chi.size() != combinat::edge_count(n))
        throw BadPoint("TcfPoint for n = " + std::to_string(n) + " needs " +
                       std::to_string(combinat::edge_count(n)) + " coordinates, got " +
                       std::to_string(chi.size()));
}

AffineInequality::AffineInequality(int n_, std::vector<Integer> c_, Integer c0_,
                                   std::string name_)
    : n(n_), c(std::move(c_)), c0(std::move(c0_)), name(std::move(name_)) {
    if (n < 1) throw BadInequality("AffineInequality needs n >= 1");
    if (c.size() != combinat::edge_count(n))
        throw BadInequality("AffineInequality for n = " + std::to_string(n) + " needs " +
                            std::to_string(combinat::edge_count(n)) + " coefficients, got " +
                            std::to_string(c.size()));
}

Rational AffineInequality::evaluate(const TcfPoint& x) const {
    if (x.n != n) throw BadInequality("evaluate: point and inequality sizes differ");
    Rational v = 0;
    for (std::size_t e = 0; e < c.size(); ++e)
        if (c[e] != 0) v += Rational(c[e]) * x.chi[e];
    return v;
}

AffineInequality AffineInequality::normalized() const {
    Integer g = vector_gcd(c, c0);
    if (g == 0 || g == 1) return *this;
    AffineInequality out = *this;
    for (Integer& e : out.c) e /= g;
    out.c0 /= g;
    return out;
}

AffineInequality AffineInequality::from_rational(int n, const std::vector<Rational>& c,
                                                 const Rational& c0, std::string name) {
    Integer scale = den(c0);
    for (const Rational& r : c) scale = lcm(scale, den(r));
    std::vector<Integer> ci(c.size());
    for (std::size_t e = 0; e < c.size(); ++e) ci[e] = num(c[e] * Rational(scale));
    return AffineInequality(n, std::move(ci), num(c0 * Rational(scale)), std::move(name))
        .normalized();
}

AffineInequality act(const combinat::Permutation& sigma, const AffineInequality& q) {
    if (sigma.n() != q.n) throw BadInequality("act: permutation and inequality sizes differ");
    EdgeIndexer ei(q.n);
    std::vector<Integer> c(q.c.size());
    for (int i = 1; i <= q.n; ++i)
        for (int j = i + 1; j <= q.n; ++j)
            c[ei.pos(i, j)] = q.c[ei.pos(sigma.image(i), sigma.image(j))];
    return AffineInequality(q.n, std::move(c), q.c0, q.name);
}

std::vector<AffineInequality> inequality_orbit(const AffineInequality& q) {
    using Key = std::pair<std::vector<Integer>, Integer>;
    std::map<Key, bool> seen;
    std::deque<AffineInequality> queue;
    seen.emplace(Key{q.c, q.c0}, true);
    queue.push_back(q);
    std::vector<combinat::Permutation> gens;
    for (int i = 1; i < q.n; ++i)
        gens.push_back(combinat::Permutation::transposition(q.n, i, i + 1));
    while (!queue.empty()) {
        AffineInequality cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            AffineInequality nxt = act(g, cur);
            Key k{nxt.c, nxt.c0};
            if (seen.emplace(std::move(k), true).second) queue.push_back(std::move(nxt));
        }
    }
    std::vector<AffineInequality> out;
    out.reserve(seen.size());
    for (const auto& [key, unused] : seen)
        out.emplace_back(q.n, key.first, key.second, q.name);
    return out;  // map iteration is sorted by (c, c0)
}

AffineInequality canonical_inequality(const AffineInequality& q) {
    return inequality_orbit(q).front();
}

TcfPoint project_psi(const ecf::SetFunction& theta) {
    if (!theta.ecf_normalized())
        throw BadPoint("project_psi needs an ECF-normalized set function");
    const int n = theta.n;
    EdgeIndexer ei(n);
    std::vector<Rational> chi(ei.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            chi[ei.pos(i, j)] = Rational(2) - theta.at(bit(i) | bit(j));
    return TcfPoint(n, std::move(chi));
}

AffineInequality hypermetric_inequality(const std::vector<Integer>& b) {
    const int n = (int)b.size();
    if (n < 1) throw BadInequality("hypermetric_inequality needs a nonempty b");
    bool nonzero = false;
    for (const Integer& e : b)
        if (e != 0) nonzero = true;
    if (!nonzero) throw BadInequality("hypermetric_inequality needs some b_i != 0");
    EdgeIndexer ei(n);
    std::vector<Integer> c(ei.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c[ei.pos(i, j)] = -b[(std::size_t)i - 1] * b[(std::size_t)j - 1];
    Integer c0 = 0;
    for (const Integer& e : b) c0 += e * (e - 1) / 2;  // e(e-1) is even
    return AffineInequality(n, std::move(c), std::move(c0), "hypermetric");
}

Rational quadratic_form(const TcfPoint& x, const std::vector<Integer>& a) {
    if ((int)a.size() != x.n) throw BadPoint("quadratic_form: size mismatch");
    EdgeIndexer ei(x.n);
    Rational v = 0;
    for (const Integer& e : a) v += Rational(e * e);
    for (int i = 1; i <= x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j) {
            Integer p = a[(std::size_t)i - 1] * a[(std::size_t)j - 1];
            if (p != 0) v += Rational(2 * p) * x.chi[ei.pos(i, j)];
        }
    return v;
}

HypermetricScan hypermetric_valid_check(const TcfPoint& x, int bound) {
    if (bound < 1) throw BadPoint("hypermetric_valid_check needs bound >= 1");
    const int n = x.n;
    EdgeIndexer ei(n);

    // Scale chi to a common denominator; stay in int64 when the products
    // cannot overflow, which covers every model produced in this library.
    Integer dext = 1;
    for (const Rational& r : x.chi) dext = lcm(dext, den(r));
    bool fast = dext <= Integer(INT64_C(1) << 31);
    std::vector<std::int64_t> s(ei.size());
    std::int64_t d64 = 0;
    if (fast) {
        d64 = dext.convert_to<std::int64_t>();
        std::int64_t m = 0;
        for (std::size_t e = 0; e < s.size(); ++e) {
            Integer v = num(x.chi[e] * Rational(dext));
            if (abs(v) > Integer(INT64_C(1) << 40)) {
                fast = false;
                break;
            }
            s[e] = v.convert_to<std::int64_t>();
            m = std::max(m, std::abs(s[e]));
        }
        // worst |b^T X b * D|: n*bound^2*D + 2*E*bound^2*max|s|
        if (fast) {
            long double cap = (long double)n * bound * bound * d64 +
                              2.0L * (long double)ei.size() * bound * bound * m;
            if (cap > 4.0e18L) fast = false;
        }
    }

    std::vector<int> b((std::size_t)n, -bound);
    HypermetricScan out;
    while (true) {
        // skip the all-zero vector and fix the sign of the first nonzero entry
        int first = 0;
        for (int i = 0; i < n; ++i)
            if (b[(std::size_t)i] != 0) {
                first = b[(std::size_t)i];
                break;
            }
        if (first > 0) {
            bool violated = false;
            bool flip = false;
            if (fast) {
                std::int64_t quad = 0, sum = 0;
                for (int i = 0; i < n; ++i) {
                    sum += b[(std::size_t)i];
                    quad += (std::int64_t)b[(std::size_t)i] * b[(std::size_t)i] * d64;
                }
                std::size_t e = 0;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j, ++e) {
                        std::int64_t p = (std::int64_t)b[(std::size_t)i - 1] * b[(std::size_t)j - 1];
                        if (p != 0) quad += 2 * p * s[e];
                    }
                if (quad < sum * d64)
                    violated = true;
                else if (quad < -sum * d64)
                    violated = flip = true;
            } else {
                std::vector<Integer> bi(b.begin(), b.end());
                Rational quad = quadratic_form(x, bi);
                Integer sum = 0;
                for (const Integer& e : bi) sum += e;
                if (quad < Rational(sum))
                    violated = true;
                else if (quad < Rational(-sum))
                    violated = flip = true;
            }
            if (violated) {
                out.all_satisfied = false;
                out.violating_b.assign(b.begin(), b.end());
                if (flip)
                    for (Integer& e : out.violating_b) e = -e;
                AffineInequality h = hypermetric_inequality(out.violating_b);
                out.lhs = h.evaluate(x);
                out.rhs = Rational(h.c0);
                return out;
            }
        }
        // odometer step over [-bound, bound]^n
        int pos = n - 1;
        while (pos >= 0 && b[(std::size_t)pos] == bound) b[(std::size_t)pos--] = -bound;
        if (pos < 0) break;
        ++b[(std::size_t)pos];
    }
    return out;
}

namespace {

HypermetricRecognition not_hypermetric(std::string reason) {
    HypermetricRecognition r;
    r.hypermetric = false;
    r.reason = std::move(reason);
    return r;
}

/** Integer square root when v is a perfect square. */
std::optional<Integer> exact_sqrt(const Integer& v) {
    if (v < 0) return std::nullopt;
    Integer r = sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

}  // namespace

HypermetricRecognition recognize_hypermetric(const AffineInequality& q) {
    const int n = q.n;
    EdgeIndexer ei(n);

    std::vector<int> w;  // support vertices
    {
        std::vector<bool> touched((std::size_t)n + 1, false);
        for (std::size_t e = 0; e < q.c.size(); ++e)
            if (q.c[e] != 0) {
                auto [i, j] = ei.pair(e);
                touched[(std::size_t)i] = touched[(std::size_t)j] = true;
            }
        for (int i = 1; i <= n; ++i)
            if (touched[(std::size_t)i]) w.push_back(i);
    }

    if (w.empty()) {
        if (q.c0 != 0) return not_hypermetric("all edge coefficients vanish but the constant is nonzero");
        HypermetricRecognition r;
        r.hypermetric = true;
        r.b.assign((std::size_t)n, 0);
        r.b[0] = 1;
        r.q = 1;
        return r;
    }

    if (w.size() == 2) {
        // only direct pattern matches here; a complete treatment of
        // support-2 rows runs into Pell equations
        const Integer& gamma = q.c[ei.pos(w[0], w[1])];
        if (gamma < 0 && q.c0 == 0) {
            HypermetricRecognition r;
            r.hypermetric = true;
            r.b.assign((std::size_t)n, 0);
            r.b[(std::size_t)w[0] - 1] = 1;
            r.b[(std::size_t)w[1] - 1] = 1;
            r.q = Rational(1) / Rational(-gamma);
            return r;
        }
        if (gamma > 0 && q.c0 == gamma) {
            HypermetricRecognition r;
            r.hypermetric = true;
            r.b.assign((std::size_t)n, 0);
            r.b[(std::size_t)w[0] - 1] = 1;
            r.b[(std::size_t)w[1] - 1] = -1;
            r.q = Rational(1) / Rational(gamma);
            return r;
        }
        return not_hypermetric("support-2 row matches neither the positivity nor the upper-bound pattern");
    }

    // |support| >= 3: the coefficients must be a rank-one pattern -s*b_i*b_j
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t bpos = a + 1; bpos < w.size(); ++bpos)
            if (q.c[ei.pos(w[a], w[bpos])] == 0)
                return not_hypermetric("support is not a complete subgraph");

    // rho_k = -c_ik*c_jk/c_ij = s*b_k^2 for any i, j in the support
    std::vector<Rational> rho(w.size());
    for (std::size_t a = 0; a < w.size(); ++a) {
        std::size_t i = (a == 0) ? 1 : 0;
        std::size_t j = (a <= 1) ? 2 : 1;
        const Integer& cik = q.c[ei.pos(w[i], w[a])];
        const Integer& cjk = q.c[ei.pos(w[j], w[a])];
        const Integer& cij = q.c[ei.pos(w[i], w[j])];
        rho[a] = -Rational(cik) * Rational(cjk) / Rational(cij);
        if (rho[a] <= 0) return not_hypermetric("coefficient ratios have the wrong sign");
    }

    // b_k / b_k0 = sqrt(rho_k / rho_k0), so each ratio must be a square
    std::vector<Integer> p(w.size()), qd(w.size());
    Integer beta = 1;
    for (std::size_t a = 0; a < w.size(); ++a) {
        Rational ratio = rho[a] / rho[0];
        auto pn = exact_sqrt(num(ratio));
        auto pd = exact_sqrt(den(ratio));
        if (!pn || !pd) return not_hypermetric("coefficient ratios are not rational squares");
        p[a] = *pn;
        qd[a] = *pd;
        beta = lcm(beta, qd[a]);
    }

    std::vector<Integer> b0((std::size_t)n, 0);
    for (std::size_t a = 0; a < w.size(); ++a) {
        Integer mag = p[a] * (beta / qd[a]);
        int sign = (a == 0) ? 1 : ((q.c[ei.pos(w[0], w[a])] < 0) ? 1 : -1);
        b0[(std::size_t)w[a] - 1] = sign > 0 ? mag : -mag;
    }
    Integer g = vector_gcd(b0, 0);
    for (Integer& e : b0) e /= g;

    const Integer& bk0 = b0[(std::size_t)w[0] - 1];
    Rational s0 = rho[0] / Rational(bk0 * bk0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (Rational(q.c[ei.pos(i, j)]) !=
                -s0 * Rational(b0[(std::size_t)i - 1] * b0[(std::size_t)j - 1]))
                return not_hypermetric("coefficients are not a rank-one pattern");

    // true b = t*eps*b0 with s = s0/t^2; the constant term pins t down:
    // t*(c0/s0 - B2/2) = -eps*B1/2
    Integer b1 = 0, b2 = 0;
    for (const Integer& e : b0) {
        b1 += e;
        b2 += e * e;
    }
    Rational d = Rational(q.c0) / s0 - Rational(b2) / 2;
    Integer t = 0;
    int eps = 0;
    if (d == 0) {
        if (b1 != 0) return not_hypermetric("constant term does not match any scaling");
        t = 1;
        eps = 1;
    } else {
        for (int e : {1, -1}) {
            Rational cand = Rational(-e) * Rational(b1) / (2 * d);
            if (cand > 0 && is_integer(cand)) {
                t = num(cand);
                eps = e;
                break;
            }
        }
        if (eps == 0) return not_hypermetric("constant term does not match any scaling");
    }

    HypermetricRecognition r;
    r.hypermetric = true;
    r.b.resize((std::size_t)n);
    for (std::size_t i = 0; i < b0.size(); ++i) r.b[i] = Integer(eps) * t * b0[i];
    r.q = Rational(t * t) / s0;

    AffineInequality check = hypermetric_inequality(r.b);
    for (std::size_t e = 0; e < q.c.size(); ++e)
        if (Rational(check.c[e]) != r.q * Rational(q.c[e]))
            throw std::logic_error("hypermetric recognition produced an inconsistent b");
    if (Rational(check.c0) != r.q * Rational(q.c0))
        throw std::logic_error("hypermetric recognition produced an inconsistent constant");
    return r;
}

TcfPoint clique_partition_point(const SetPartition& partition, int n) {
    EdgeIndexer ei(n);
    std::vector<Rational> chi(ei.size(), Rational(0));
    std::size_t covered = 0;
    for (const auto& block : partition.blocks) {
        for (int v : block)
            if (v < 1 || v > n) throw BadPoint("clique_partition_point: vertex out of range");
        covered += block.size();
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                chi[ei.pos(block[a], block[b])] = 1;
    }
    if (covered != (std::size_t)n)
        throw BadPoint("clique_partition_point: partition does not cover {1..n}");
    return TcfPoint(n, std::move(chi));
}

std::vector<TcfPoint> all_clique_partition_points(int n) {
    std::vector<TcfPoint> out;
    for (const SetPartition& p : combinat::set_partitions(n))
        out.push_back(clique_partition_point(p, n));
    return out;
}

MembershipResult membership(const TcfPoint& x) {
    const int n = x.n;
    const Subset full = full_mask(n);
    EdgeIndexer ei(n);

    // Feasibility in the spectral weights: lambda >= 0 over nonempty K,
    // unit margins on singletons, margins 2 - chi_ij over pairs.
    LinearProgram lp;
    lp.num_vars = full;  // variable k-1 is lambda_K for mask K
    lp.bounds.assign(lp.num_vars, LinearProgram::VarBounds{Rational(0), std::nullopt});
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (Subset k = 1; k <= full; ++k)
            if (k & bit(i)) row[k - 1] = 1;
        lp.add_row(std::move(row), LinearProgram::Sense::EQ, Rational(1));
    }
    for (std::size_t e = 0; e < ei.size(); ++e) {
        auto [i, j] = ei.pair(e);
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (Subset k = 1; k <= full; ++k)
            if (k & (bit(i) | bit(j))) row[k - 1] = 1;
        lp.add_row(std::move(row), LinearProgram::Sense::EQ, Rational(2) - x.chi[e]);
    }

    LpResult res = lp_solve(lp);
    MembershipResult out;
    if (res.status == LpResult::Status::Optimal) {
        out.member = true;
        out.witness_weights.n = n;
        out.witness_weights.lambda.assign((std::size_t)full + 1, Rational(0));
        for (Subset k = 1; k <= full; ++k) out.witness_weights.lambda[k] = res.x[k - 1];
        out.witness_theta = ecf::theta_from_weights(out.witness_weights);
        return out;
    }
    if (res.status != LpResult::Status::Infeasible || !res.farkas)
        throw std::logic_error("membership: feasibility LP returned an unexpected status");

    // Multipliers w_i on singleton rows and z_e on pair rows give the valid
    // inequality sum_e z_e*chi_e <= sum_i w_i + 2*sum_e z_e, violated at x.
    const auto& mu = res.farkas->row_mult;
    std::vector<Rational> z(mu.begin() + n, mu.end());
    Rational c0 = 0;
    for (int i = 0; i < n; ++i) c0 += mu[(std::size_t)i];
    for (const Rational& ze : z) c0 += 2 * ze;
    out.member = false;
    out.separator = AffineInequality::from_rational(n, z, c0, "separator");
    out.separator_lhs = out.separator.evaluate(x);
    if (out.separator_lhs <= Rational(out.separator.c0))
        throw std::logic_error("membership: separator fails to cut off the query point");
    return out;
}

Realization realize_binary(const TcfPoint& x) {
    MembershipResult m = membership(x);
    if (!m.member)
        throw NotAMemberError("realize_binary: point is outside the polytope", m.separator);
    Realization r;
    r.weights = std::move(m.witness_weights);
    r.theta = std::move(m.witness_theta);
    r.kappa = r.theta.at(full_mask(x.n));
    ecf::SetFunction cap(x.n);
    for (Subset a = 0; a < (Subset)r.theta.values.size(); ++a)
        cap.at(a) = r.theta.at(a) / r.kappa;
    r.model = ecf::capacity_to_distribution(cap);
    r.event_probability = Rational(1) / r.kappa;
    return r;
}

TcfPoint lift_point(const TcfPoint& x, int target_n) {
    if (target_n < x.n) throw BadPoint("lift_point: target size below current size");
    EdgeIndexer src(x.n), dst(target_n);
    std::vector<Rational> chi(dst.size(), Rational(0));
    for (int i = 1; i <= x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j) chi[dst.pos(i, j)] = x.chi[src.pos(i, j)];
    return TcfPoint(target_n, std::move(chi));
}

AffineInequality lift_inequality(const AffineInequality& q, int target_n) {
    if (target_n < q.n) throw BadInequality("lift_inequality: target size below current size");
    EdgeIndexer src(q.n), dst(target_n);
    std::vector<Integer> c(dst.size(), Integer(0));
    for (int i = 1; i <= q.n; ++i)
        for (int j = i + 1; j <= q.n; ++j) c[dst.pos(i, j)] = q.c[src.pos(i, j)];
    return AffineInequality(target_n, std::move(c), q.c0, q.name);
}

TcfPoint restrict_point(const TcfPoint& x, Subset a) {
    if (a == 0 || a >= (Subset(1) << x.n))
        throw BadPoint("restrict_point: subset out of range");
    std::vector<int> keep;
    for (int i = 1; i <= x.n; ++i)
        if (a & bit(i)) keep.push_back(i);
    const int m = (int)keep.size();
    EdgeIndexer src(x.n), dst(std::max(m, 1));
    std::vector<Rational> chi(combinat::edge_count(m));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            chi[dst.pos(i, j)] = x.chi[src.pos(keep[(std::size_t)i - 1], keep[(std::size_t)j - 1])];
    return TcfPoint(m, std::move(chi));
}

TcfPoint denominator_vertex(int k, int m, DenominatorConstruction which) {
    if (m < 2) throw BadPoint("denominator_vertex needs m >= 2");
    const Rational one_over_m = Rational(1) / Rational(m);
    if (which == DenominatorConstruction::I) {
        if (k != 1 && k != m - 1)
            throw BadPoint("denominator_vertex: construction I carries only q = 1/m and (m-1)/m");
        const int n = 2 * m + 1;
        EdgeIndexer ei(n);
        std::vector<Rational> chi(ei.size(), Rational(0));
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) chi[ei.pos(i, j)] = one_over_m;
        for (int i = 1; i <= m; ++i) chi[ei.pos(i, m + i)] = Rational(m - 1) / Rational(m);
        for (int i = 1; i <= m; ++i) chi[ei.pos(m + i, 2 * m + 1)] = one_over_m;
        return TcfPoint(n, std::move(chi));
    }
    if (k < 1 || k > m - 1)
        throw BadPoint("denominator_vertex: construction II needs 1 <= k <= m-1");
    const int n = 2 * m + 3;
    EdgeIndexer ei(n);
    std::vector<Rational> chi(ei.size(), Rational(0));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) chi[ei.pos(i, j)] = one_over_m;
    for (int i = 1; i <= m; ++i) chi[ei.pos(i, m + i)] = Rational(m - 1) / Rational(m);
    for (int i = 1; i <= m; ++i) chi[ei.pos(m + i, 2 * m + 1)] = one_over_m;
    for (int i = 1; i <= m - k; ++i) chi[ei.pos(m + i, 2 * m + 2)] = one_over_m;
    chi[ei.pos(2 * m + 1, 2 * m + 2)] = Rational(m - k) / Rational(m);
    chi[ei.pos(2 * m + 2, 2 * m + 3)] = Rational(k) / Rational(m);
    return TcfPoint(n, std::move(chi));
}

AffineInequality cyclic_inequality(int k, int n) {
    if (k < 2) throw BadInequality("cyclic_inequality needs k >= 2");
    if (n < 2 * k) throw BadInequality("cyclic_inequality needs n >= 2k");
    EdgeIndexer ei(n);
    std::vector<Integer> c(ei.size(), Integer(0));
    for (int i = 1; i <= 2 * k - 1; ++i) c[ei.pos(i, 2 * k)] = 1;
    for (int i = 1; i <= 2 * k - 2; ++i) c[ei.pos(i, i + 1)] = -1;
    c[ei.pos(1, 2 * k - 1)] = -1;
    return AffineInequality(n, std::move(c), Integer(k - 1), "cyclic-" + std::to_string(k));
}

PsdResult is_psd(const TcfPoint& x) {
    const int n = x.n;
    EdgeIndexer ei(n);
    QMatrix full(n, n);
    for (int i = 1; i <= n; ++i) full.at(i - 1, i - 1) = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            full.at(i - 1, j - 1) = full.at(j - 1, i - 1) = x.chi[ei.pos(i, j)];

    // scan principal minors, smallest subsets first
    bool failed = false;
    for (int size = 1; size <= n && !failed; ++size) {
        for (Subset mask = 1; mask <= full_mask(n) && !failed; ++mask) {
            if (popcount(mask) != size) continue;
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                if (mask & bit(i)) idx.push_back(i - 1);
            QMatrix sub((int)idx.size(), (int)idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    sub.at((int)r, (int)c) = full.at(idx[r], idx[c]);
            if (determinant(sub) < 0) failed = true;
        }
    }
    PsdResult out;
    if (!failed) return out;

    // witness by symmetric elimination with positive pivots; a negative
    // Schur diagonal or an indefinite zero-diagonal pair yields a direction
    out.psd = false;
    QMatrix w = full;
    std::vector<std::vector<Rational>> vecs((std::size_t)n);
    for (int i = 0; i < n; ++i) {
        vecs[(std::size_t)i].assign((std::size_t)n, Rational(0));
        vecs[(std::size_t)i][(std::size_t)i] = 1;
    }
    std::vector<int> rem(n);
    std::iota(rem.begin(), rem.end(), 0);
    std::vector<Rational> dir;
    while (dir.empty()) {
        int neg = -1, pos = -1;
        for (int r : rem) {
            if (w.at(r, r) < 0) {
                neg = r;
                break;
            }
            if (pos < 0 && w.at(r, r) > 0) pos = r;
        }
        if (neg >= 0) {
            dir = vecs[(std::size_t)neg];
            break;
        }
        if (pos >= 0) {
            std::vector<Rational> col((std::size_t)n);
            for (int t : rem) col[(std::size_t)t] = w.at(t, pos);
            const Rational& piv = w.at(pos, pos);
            for (int t : rem) {
                if (t == pos || col[(std::size_t)t] == 0) continue;
                Rational f = col[(std::size_t)t] / piv;
                for (int u = 0; u < n; ++u)
                    vecs[(std::size_t)t][(std::size_t)u] -= f * vecs[(std::size_t)pos][(std::size_t)u];
                for (int u : rem)
                    if (u != pos) w.at(t, u) -= f * col[(std::size_t)u];
            }
            rem.erase(std::find(rem.begin(), rem.end(), pos));
            continue;
        }
        // all remaining diagonal entries vanish
        bool found = false;
        for (std::size_t a = 0; a < rem.size() && !found; ++a)
            for (std::size_t b = a + 1; b < rem.size() && !found; ++b) {
                const Rational& off = w.at(rem[a], rem[b]);
                if (off == 0) continue;
                dir = vecs[(std::size_t)rem[a]];
                const auto& other = vecs[(std::size_t)rem[b]];
                for (int u = 0; u < n; ++u) {
                    if (off > 0)
                        dir[(std::size_t)u] -= other[(std::size_t)u];
                    else
                        dir[(std::size_t)u] += other[(std::size_t)u];
                }
                found = true;
            }
        if (!found) throw std::logic_error("is_psd: witness search exhausted a non-psd matrix");
    }
    out.witness = primitive_integer_direction(dir);
    out.witness_value = quadratic_form(x, out.witness);
    if (out.witness_value >= 0) throw std::logic_error("is_psd: witness direction is not negative");
    return out;
}

}  // namespace tcfkit::tcf
