#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcfkit/cutcor.hpp"

#include <random>
#include <set>

using namespace tcfkit;
using namespace tcfkit::cutcor;
using combinat::EdgeIndexer;
using combinat::edge_count;

namespace {

AffineInequality triangle(int m) {
    // x_12 - x_13 - x_23 <= 0 on K_m
    EdgeIndexer ei(m);
    std::vector<Integer> c(ei.size(), Integer(0));
    c[ei.pos(1, 2)] = 1;
    c[ei.pos(1, 3)] = -1;
    c[ei.pos(2, 3)] = -1;
    return AffineInequality(m, std::move(c), Integer(0), "triangle");
}

AffineInequality pentagon() {
    // b = (1,1,1,-1,-1): sum b_i b_j x_ij <= 0 on K_5
    EdgeIndexer ei(5);
    const int b[] = {1, 1, 1, -1, -1};
    std::vector<Integer> c(ei.size());
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) c[ei.pos(i, j)] = b[i - 1] * b[j - 1];
    return AffineInequality(5, std::move(c), Integer(0), "pentagon");
}

bool valid_on_all_cuts(const AffineInequality& q) {
    for (const auto& x : all_cut_vectors(q.n))
        if (!q.satisfied_by(TcfPoint(q.n, x))) return false;
    return true;
}

}  // namespace

TEST_CASE("cut vectors of K_3") {
    CHECK(cut_vector(0b001u, 3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    CHECK(cut_vector(0b110u, 3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    auto cuts = all_cut_vectors(3);
    CHECK(cuts.size() == 4);
    std::set<std::vector<Rational>> distinct(cuts.begin(), cuts.end());
    CHECK(distinct.size() == 4);
}

TEST_CASE("covariance mapping round trips") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 4);
        std::vector<Rational> p((std::size_t)n), q(edge_count(n));
        for (auto& v : p) v = Rational((int)(rng() % 5)) / (1 + (int)(rng() % 4));
        for (auto& v : q) v = Rational((int)(rng() % 5)) / (1 + (int)(rng() % 4));
        CorrelationPoint y(n, p, q);
        CorrelationPoint back = covariance_map_inverse(covariance_map(y), n);
        CHECK(back.p == p);
        CHECK(back.q == q);
    }
}

TEST_CASE("covariance mapping sends correlation vertices to cuts") {
    const int n = 4;
    EdgeIndexer ei(n);
    for (combinat::Subset s = 0; s < (1u << n); ++s) {
        std::vector<Rational> p((std::size_t)n), q(edge_count(n));
        for (int i = 1; i <= n; ++i) p[(std::size_t)i - 1] = (s >> (i - 1)) & 1;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                q[ei.pos(i, j)] = p[(std::size_t)i - 1] * p[(std::size_t)j - 1];
        CHECK(covariance_map(CorrelationPoint(n, p, q)) == cut_vector(s, n + 1));
    }
}

TEST_CASE("slice embedding and its inverse") {
    TcfPoint x(3, {Rational(1) / 2, Rational(0), Rational(1)});
    auto emb = cut_embedding(x);
    EdgeIndexer ei(4);
    CHECK(emb[ei.pos(1, 4)] == Rational(1) / 3);
    CHECK(emb[ei.pos(1, 2)] == Rational(1) / 3);  // (2 - 2*(1/2))/3
    CHECK(emb[ei.pos(2, 3)] == Rational(0));      // fully dependent pair
    TcfPoint back = cut_embedding_inverse(emb, 3);
    CHECK(back.chi == x.chi);

    auto off = emb;
    off[ei.pos(1, 4)] += 1;
    CHECK_THROWS_AS(cut_embedding_inverse(off, 3), tcf::BadPoint);
}

TEST_CASE("switching acts as an involution and composes by symmetric difference") {
    std::mt19937 rng(8181);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 3 + (int)(rng() % 3);
        std::vector<Integer> c(edge_count(m));
        for (auto& v : c) v = Integer((int)(rng() % 9) - 4);
        AffineInequality q(m, c, Integer((int)(rng() % 5) - 2));
        combinat::Subset s = rng() % (1u << m), r = rng() % (1u << m);
        CHECK(switch_inequality(switch_inequality(q, s), s) == q);
        CHECK(switch_inequality(switch_inequality(q, s), r) ==
              switch_inequality(q, s ^ r));
    }
}

TEST_CASE("switching preserves validity over the cut polytope") {
    AffineInequality tri = triangle(4);
    REQUIRE(valid_on_all_cuts(tri));
    for (combinat::Subset s = 0; s < 16u; ++s) CHECK(valid_on_all_cuts(switch_inequality(tri, s)));
}

TEST_CASE("triangle pullbacks to the segment") {
    // apex vertex 3: the three triangle orientations pull back to the
    // two facets of [0, 1] (one arrives twice)
    AffineInequality t12 = triangle(3);  // x12 - x13 - x23 <= 0
    AffineInequality pulled = pull_back_to_tcf(t12);
    CHECK(pulled.n == 2);
    CHECK(pulled.c == std::vector<Integer>{Integer(-1)});
    CHECK(pulled.c0 == 0);

    EdgeIndexer ei(3);
    std::vector<Integer> c(3, Integer(0));
    c[ei.pos(1, 3)] = 1;
    c[ei.pos(1, 2)] = -1;
    c[ei.pos(2, 3)] = -1;
    AffineInequality t13(3, std::move(c), Integer(0));
    pulled = pull_back_to_tcf(t13);
    CHECK(pulled.c == std::vector<Integer>{Integer(1)});
    CHECK(pulled.c0 == 1);
}

TEST_CASE("pulled back inequalities are valid on the slice") {
    std::mt19937 rng(4242);
    AffineInequality tri = triangle(4);
    for (const auto& facet : expand_generator(tri)) {
        AffineInequality pulled = pull_back_to_tcf(facet);
        for (int trial = 0; trial < 5; ++trial) {
            // random member of TCF_3 as a mixture of clique partition points
            auto cpps = tcf::all_clique_partition_points(3);
            std::vector<Rational> chi(3, Rational(0));
            Rational total = 0;
            std::vector<Rational> weight(cpps.size());
            for (auto& w : weight) {
                w = (int)(rng() % 4);
                total += w;
            }
            if (total == 0) {
                weight[0] = 1;
                total = 1;
            }
            for (std::size_t k = 0; k < cpps.size(); ++k)
                for (std::size_t e = 0; e < 3; ++e) chi[e] += weight[k] / total * cpps[k].chi[e];
            CHECK(pulled.satisfied_by(TcfPoint(3, chi)));
        }
    }
}

TEST_CASE("orbit expansion reproduces the small cut polytopes") {
    CHECK(expand_generator(triangle(3)).size() == 4);
    CHECK(expand_generator(triangle(4)).size() == 16);
    auto tri5 = expand_generator(triangle(5));
    CHECK(tri5.size() == 40);
    auto pent5 = expand_generator(pentagon());
    CHECK(pent5.size() == 16);

    // the two orbits are disjoint and together they describe CUT_5
    std::set<std::pair<std::vector<Integer>, Integer>> all;
    for (const auto& q : tri5) all.emplace(q.c, q.c0);
    for (const auto& q : pent5) all.emplace(q.c, q.c0);
    CHECK(all.size() == 56);
    for (const auto& q : pent5) CHECK(valid_on_all_cuts(q));
}
