#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcfkit/combinat.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace tcfkit;
using namespace tcfkit::combinat;

TEST_CASE("edge positions round trip") {
    for (int n = 2; n <= 8; ++n) {
        EdgeIndexer ei(n);
        std::size_t p = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++p) {
                CHECK(ei.pos(i, j) == p);
                CHECK(ei.pos(j, i) == p);
                CHECK(ei.pair(p) == std::pair<int, int>(i, j));
            }
        CHECK(p == edge_count(n));
    }
    CHECK(EdgeIndexer(5).pos(2, 5) == 6);
    CHECK(EdgeIndexer(6).pos(5, 6) == 14);
    CHECK_THROWS_AS(EdgeIndexer(4).pos(1, 5), BadIndex);
    CHECK_THROWS_AS(EdgeIndexer(4).pos(2, 2), BadIndex);
}

TEST_CASE("permutation composition and inverse") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 5);
        auto random_perm = [&]() {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[(std::size_t)i] = i + 1;
            std::shuffle(img.begin(), img.end(), rng);
            return Permutation(img);
        };
        Permutation s = random_perm(), t = random_perm();
        for (int i = 1; i <= n; ++i) CHECK(s.then(t).image(i) == t.image(s.image(i)));
        Permutation id(n);
        CHECK(s.then(s.inverse()) == id);
        CHECK(s.inverse().then(s) == id);

        std::vector<Rational> x(edge_count(n));
        for (auto& v : x) v = Rational((int)(rng() % 7)) / (1 + (int)(rng() % 3));
        CHECK(act(s.then(t), x, n) == act(s, act(t, x, n), n));
    }
}

TEST_CASE("act relabels edge vectors") {
    // n = 3, sigma = (1 2): chi'_{13} picks up chi_{23}
    std::vector<Rational> x{Rational(1), Rational(2), Rational(3)};  // x12, x13, x23
    Permutation s = Permutation::transposition(3, 1, 2);
    std::vector<Rational> y = act(s, x, 3);
    CHECK(y == std::vector<Rational>{Rational(1), Rational(3), Rational(2)});
}

TEST_CASE("subset action matches image masks") {
    Permutation s = Permutation::transposition(3, 1, 2);
    CHECK(s.apply(0b011u) == 0b011u);
    CHECK(s.apply(0b101u) == 0b110u);
    // subset-indexed vectors list masks 3, 5, 6, 7 in this order
    std::vector<Rational> x{Rational(12), Rational(13), Rational(23), Rational(123)};
    std::vector<Rational> y = act_on_subset_vector(s, x, 3);
    CHECK(y == std::vector<Rational>{Rational(12), Rational(23), Rational(13), Rational(123)});
}

TEST_CASE("symmetric group has n! distinct elements") {
    auto g3 = symmetric_group(3);
    CHECK(g3.size() == 6);
    auto g4 = symmetric_group(4);
    CHECK(g4.size() == 24);
    std::set<std::vector<int>> seen;
    for (const auto& p : g4) {
        std::vector<int> img;
        for (int i = 1; i <= 4; ++i) img.push_back(p.image(i));
        seen.insert(img);
    }
    CHECK(seen.size() == 24);
}

TEST_CASE("orbit of a single-edge vector") {
    std::vector<Rational> x{Rational(1), Rational(0), Rational(0)};
    auto orb = orbit(x, 3);
    CHECK(orb.size() == 3);
    CHECK(canonical_representative(x, 3) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    // orbit output is sorted, so the canonical form leads
    CHECK(orb.front() == canonical_representative(x, 3));
}

TEST_CASE("orbit sizes on larger vectors") {
    // one edge out of ten: orbit = number of edges
    std::vector<Rational> x(edge_count(5), Rational(0));
    x[EdgeIndexer(5).pos(4, 5)] = 1;
    CHECK(orbit(x, 5).size() == 10);
    // a triangle in K_5 can sit on any 3 of the 5 vertices
    std::vector<Rational> tri(edge_count(5), Rational(0));
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) tri[EdgeIndexer(5).pos(i, j)] = 1;
    CHECK(orbit(tri, 5).size() == 10);
}

TEST_CASE("set partitions count to the Bell numbers") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
        auto parts = set_partitions(n);
        CHECK(parts.size() == bell[n]);
        for (const auto& p : parts) {
            std::vector<bool> seen((std::size_t)n + 1, false);
            for (const auto& block : p.blocks) {
                CHECK(!block.empty());
                for (int v : block) {
                    CHECK(!seen[(std::size_t)v]);
                    seen[(std::size_t)v] = true;
                }
            }
            for (int v = 1; v <= n; ++v) CHECK(seen[(std::size_t)v]);
        }
    }
}

TEST_CASE("set partition normalization and validation") {
    auto p = SetPartition::normalized({{3, 1}, {2}}, 3);
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == std::vector<int>{1, 3});
    CHECK(p.blocks[1] == std::vector<int>{2});
    CHECK_THROWS_AS(SetPartition::normalized({{1, 2}}, 3), BadIndex);
    CHECK_THROWS_AS(SetPartition::normalized({{1, 2}, {2, 3}}, 3), BadIndex);
}

TEST_CASE("subset strings") {
    CHECK(subset_str(0b101u) == "{1,3}");
    CHECK(subset_str(0) == "{}");
    CHECK(parse_subset("{1,3}", 3) == 0b101u);
    CHECK(parse_subset("{}", 3) == 0u);
    CHECK_THROWS_AS(parse_subset("{1,9}", 3), BadIndex);
    CHECK_THROWS_AS(parse_subset("{1,1}", 3), BadIndex);
}

TEST_CASE("subsets of size at least two") {
    auto subs = subsets_of_size_at_least(4, 2);
    CHECK(subs.size() == 11);
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
    for (Subset s : subs) CHECK(popcount(s) >= 2);
}
