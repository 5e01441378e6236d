#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcfkit/linprog.hpp"
#include "tcfkit/qmatrix.hpp"
#include "tcfkit/rational.hpp"

#include <random>

using namespace tcfkit;

TEST_CASE("parse_rational reads canonical and non-canonical fractions") {
    CHECK(parse_rational("3/4") == Rational(3) / 4);
    CHECK(parse_rational("-3/4") == Rational(-3) / 4);
    CHECK(parse_rational("6/4") == Rational(3) / 2);
    CHECK(parse_rational("0/17") == Rational(0));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(rational_str(parse_rational("6/4")) == "3/2");
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rational helpers") {
    Rational r = Rational(-6) / 8;
    CHECK(num(r) == -3);
    CHECK(den(r) == 4);
    CHECK(!is_integer(r));
    CHECK(is_integer(Rational(5)));
}

TEST_CASE("hash_rational_vector separates simple vectors") {
    std::vector<Rational> a{Rational(1) / 2, Rational(0), Rational(3)};
    std::vector<Rational> b{Rational(1) / 2, Rational(0), Rational(3)};
    std::vector<Rational> c{Rational(1) / 2, Rational(0), Rational(4)};
    CHECK(hash_rational_vector(a) == hash_rational_vector(b));
    CHECK(hash_rational_vector(a) != hash_rational_vector(c));
}

namespace {

// independent oracle: cofactor expansion, exponential but fine for n <= 6
Rational cofactor_det(const QMatrix& m) {
    const int n = (int)m.rows();
    if (n == 1) return m.at(0, 0);
    Rational acc = 0;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        QMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == k) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        acc += Rational(sign) * m.at(0, k) * cofactor_det(minor);
        sign = -sign;
    }
    return acc;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> numd(-6, 6);
    std::uniform_int_distribution<int> dend(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + (int)(rng() % 5);
        QMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Rational(numd(rng)) / dend(rng);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant of the 4x4 Hilbert matrix") {
    QMatrix h(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) h.at(r, c) = Rational(1) / (r + c + 1);
    CHECK(determinant(h) == Rational(1) / 6048000);
}

TEST_CASE("rank detects dependent rows") {
    QMatrix m(3, 3);
    // row3 = row1 + row2
    int vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
    for (int c = 0; c < 3; ++c) {
        m.at(0, c) = vals[0][c];
        m.at(1, c) = vals[1][c];
        m.at(2, c) = vals[0][c] + vals[1][c];
    }
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
}

TEST_CASE("solve on a nonsingular system") {
    QMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    auto x = solve(m, {Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
}

TEST_CASE("solve reports singular systems") {
    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(!solve(m, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve_consistent handles wide consistent systems") {
    QMatrix m(1, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(0, 2) = 1;
    auto x = solve_consistent(m, {Rational(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] + (*x)[2] == 3);
}

TEST_CASE("solve_consistent detects inconsistency") {
    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 2;
    CHECK(!solve_consistent(m, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("lp_solve maximizes over a bounded polygon") {
    // max x + y subject to x + 2y <= 4, 3x + y <= 6, x, y >= 0
    LinearProgram lp;
    lp.num_vars = 2;
    lp.add_row({1, 2}, LinearProgram::Sense::LE, 4);
    lp.add_row({3, 1}, LinearProgram::Sense::LE, 6);
    lp.objective = {1, 1};
    lp.bounds.assign(2, {Rational(0), std::nullopt});
    auto r = lp_solve(lp);
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(*r.objective_value == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));
}

TEST_CASE("lp_solve reports infeasibility with a checkable certificate") {
    // x >= 2 and x <= 1 cannot both hold
    LinearProgram lp;
    lp.num_vars = 1;
    lp.add_row({1}, LinearProgram::Sense::GE, 2);
    lp.add_row({1}, LinearProgram::Sense::LE, 1);
    auto r = lp_solve(lp);
    REQUIRE(r.status == LpResult::Status::Infeasible);
    REQUIRE(r.farkas.has_value());
    CHECK(verify_farkas(lp, *r.farkas));
}

TEST_CASE("lp_solve detects an unbounded objective") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.add_row({-1}, LinearProgram::Sense::LE, 0);
    lp.objective = {1};
    auto r = lp_solve(lp);
    CHECK(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("in_convex_hull separates and certifies membership") {
    // unit square
    std::vector<std::vector<Rational>> square = {
        {0, 0}, {1, 0}, {0, 1}, {1, 1}};
    auto inside = in_convex_hull({Rational(1, 2), Rational(1, 3)}, square);
    REQUIRE(inside.inside);
    Rational total = 0;
    Rational cx = 0, cy = 0;
    for (std::size_t k = 0; k < square.size(); ++k) {
        CHECK(inside.lambda[k] >= 0);
        total += inside.lambda[k];
        cx += inside.lambda[k] * square[k][0];
        cy += inside.lambda[k] * square[k][1];
    }
    CHECK(total == 1);
    CHECK(cx == Rational(1, 2));
    CHECK(cy == Rational(1, 3));

    auto outside = in_convex_hull({Rational(2), Rational(1, 2)}, square);
    REQUIRE(!outside.inside);
    Rational at_point = outside.separator_a[0] * 2 + outside.separator_a[1] / 2;
    CHECK(at_point > outside.separator_b);
    for (const auto& y : square)
        CHECK(outside.separator_a[0] * y[0] + outside.separator_a[1] * y[1] <=
              outside.separator_b);
}

TEST_CASE("in_convex_hull accepts a point of the generating set") {
    std::vector<std::vector<Rational>> pts = {{1, 2}, {3, 4}};
    CHECK(in_convex_hull(pts[1], pts).inside);
}
