#include "tcfkit/cutcor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace tcfkit::cutcor {

using combinat::EdgeIndexer;
using tcf::BadInequality;
using tcf::BadPoint;

std::vector<Rational> cut_vector(Subset s, int m) {
    if (s >= (Subset(1) << m)) throw BadPoint("cut_vector: subset out of range");
    EdgeIndexer ei(m);
    std::vector<Rational> x(ei.size(), Rational(0));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            bool ci = (s >> (i - 1)) & 1, cj = (s >> (j - 1)) & 1;
            if (ci != cj) x[ei.pos(i, j)] = 1;
        }
    return x;
}

std::vector<std::vector<Rational>> all_cut_vectors(int m) {
    std::vector<std::vector<Rational>> out;
    out.reserve((std::size_t)1 << (m - 1));
    for (Subset s = 0; s < (Subset(1) << (m - 1)); ++s) out.push_back(cut_vector(s, m));
    return out;
}

CorrelationPoint::CorrelationPoint(int n_, std::vector<Rational> p_, std::vector<Rational> q_)
    : n(n_), p(std::move(p_)), q(std::move(q_)) {
    if (n < 1 || p.size() != (std::size_t)n || q.size() != combinat::edge_count(n))
        throw BadPoint("CorrelationPoint: inconsistent sizes");
}

std::vector<Rational> covariance_map(const CorrelationPoint& y) {
    EdgeIndexer src(y.n), dst(y.n + 1);
    std::vector<Rational> x(dst.size());
    for (int i = 1; i <= y.n; ++i) x[dst.pos(i, y.n + 1)] = y.p[(std::size_t)i - 1];
    for (int i = 1; i <= y.n; ++i)
        for (int j = i + 1; j <= y.n; ++j)
            x[dst.pos(i, j)] =
                y.p[(std::size_t)i - 1] + y.p[(std::size_t)j - 1] - 2 * y.q[src.pos(i, j)];
    return x;
}

CorrelationPoint covariance_map_inverse(const std::vector<Rational>& x, int n) {
    EdgeIndexer src(n + 1), dst(n);
    if (x.size() != src.size()) throw BadPoint("covariance_map_inverse: size mismatch");
    std::vector<Rational> p((std::size_t)n), q(dst.size());
    for (int i = 1; i <= n; ++i) p[(std::size_t)i - 1] = x[src.pos(i, n + 1)];
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            q[dst.pos(i, j)] =
                (p[(std::size_t)i - 1] + p[(std::size_t)j - 1] - x[src.pos(i, j)]) / 2;
    return CorrelationPoint(n, std::move(p), std::move(q));
}

CorrelationPoint correlation_embedding(const TcfPoint& x) {
    std::vector<Rational> p((std::size_t)x.n, Rational(1) / Rational(x.n));
    std::vector<Rational> q(x.chi.size());
    for (std::size_t e = 0; e < q.size(); ++e) q[e] = x.chi[e] / Rational(x.n);
    return CorrelationPoint(x.n, std::move(p), std::move(q));
}

std::vector<Rational> cut_embedding(const TcfPoint& x) {
    return covariance_map(correlation_embedding(x));
}

TcfPoint cut_embedding_inverse(const std::vector<Rational>& x, int n) {
    CorrelationPoint y = covariance_map_inverse(x, n);
    const Rational expected = Rational(1) / Rational(n);
    for (const Rational& pi : y.p)
        if (pi != expected)
            throw BadPoint("cut_embedding_inverse: point is not on the 1/n slice");
    std::vector<Rational> chi(y.q.size());
    for (std::size_t e = 0; e < chi.size(); ++e) chi[e] = Rational(n) * y.q[e];
    return TcfPoint(n, std::move(chi));
}

AffineInequality switch_inequality(const AffineInequality& q, Subset s) {
    if (s >= (Subset(1) << q.n)) throw BadInequality("switch_inequality: subset out of range");
    EdgeIndexer ei(q.n);
    AffineInequality out = q;
    for (int i = 1; i <= q.n; ++i)
        for (int j = i + 1; j <= q.n; ++j) {
            bool ci = (s >> (i - 1)) & 1, cj = (s >> (j - 1)) & 1;
            if (ci != cj) {
                std::size_t e = ei.pos(i, j);
                out.c0 -= out.c[e];
                out.c[e] = -out.c[e];
            }
        }
    return out;
}

AffineInequality pull_back_to_tcf(const AffineInequality& cut_inequality) {
    const int n = cut_inequality.n - 1;
    if (n < 1) throw BadInequality("pull_back_to_tcf needs an inequality over K_2 at least");
    EdgeIndexer src(n + 1), dst(n);
    std::vector<Integer> c(dst.size());
    Integer c0 = Integer(n) * cut_inequality.c0;
    for (int i = 1; i <= n; ++i) c0 -= cut_inequality.c[src.pos(i, n + 1)];
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Integer& ce = cut_inequality.c[src.pos(i, j)];
            c[dst.pos(i, j)] = -2 * ce;
            c0 -= 2 * ce;
        }
    return AffineInequality(n, std::move(c), std::move(c0), cut_inequality.name).normalized();
}

std::vector<AffineInequality> expand_generator(const AffineInequality& generator) {
    using Key = std::pair<std::vector<Integer>, Integer>;
    const int m = generator.n;
    std::vector<combinat::Permutation> gens;
    for (int i = 1; i < m; ++i)
        gens.push_back(combinat::Permutation::transposition(m, i, i + 1));

    std::map<Key, bool> seen;
    std::deque<AffineInequality> queue;
    AffineInequality start = generator.normalized();
    seen.emplace(Key{start.c, start.c0}, true);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        AffineInequality cur = std::move(queue.front());
        queue.pop_front();
        auto push = [&](AffineInequality nxt) {
            nxt = nxt.normalized();
            Key k{nxt.c, nxt.c0};
            if (seen.emplace(std::move(k), true).second) queue.push_back(std::move(nxt));
        };
        for (const auto& g : gens) push(act(g, cur));
        for (int v = 1; v <= m; ++v) push(switch_inequality(cur, Subset(1) << (v - 1)));
    }
    std::vector<AffineInequality> out;
    out.reserve(seen.size());
    for (const auto& [key, unused] : seen)
        out.emplace_back(m, key.first, key.second, generator.name);
    return out;
}

}  // namespace tcfkit::cutcor
