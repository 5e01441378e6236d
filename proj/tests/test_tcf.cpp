#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcfkit/setfunction.hpp"
#include "tcfkit/tcf.hpp"

#include <random>

using namespace tcfkit;
using namespace tcfkit::tcf;
using combinat::EdgeIndexer;
using combinat::Subset;
using combinat::edge_count;

namespace {

TcfPoint point_from(int n, std::initializer_list<Rational> vals) {
    return TcfPoint(n, std::vector<Rational>(vals));
}

Rational half() { return Rational(1) / 2; }

TcfPoint star_point() {
    EdgeIndexer ei(6);
    std::vector<Rational> chi(ei.size(), Rational(0));
    for (int i = 1; i <= 5; ++i) chi[ei.pos(i, 6)] = half();
    return TcfPoint(6, std::move(chi));
}

TcfPoint star_plus_cycle_point() {
    EdgeIndexer ei(6);
    TcfPoint x = star_point();
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})
        x.chi[ei.pos(i, j)] = half();
    return x;
}

}  // namespace

TEST_CASE("projection from normalized set functions") {
    ecf::SetFunction theta = ecf::SetFunction::ecf_normalized_zero(2);
    theta.at(0b11u) = Rational(3) / 2;
    TcfPoint x = project_psi(theta);
    CHECK(x.chi == std::vector<Rational>{half()});
    theta.at(0b01u) = 2;
    CHECK_THROWS_AS(project_psi(theta), BadPoint);
}

TEST_CASE("hypermetric inequalities from b vectors") {
    AffineInequality pos = hypermetric_inequality({Integer(1), Integer(1)});
    CHECK(pos.c == std::vector<Integer>{Integer(-1)});
    CHECK(pos.c0 == 0);

    AffineInequality box = hypermetric_inequality({Integer(1), Integer(-1)});
    CHECK(box.c == std::vector<Integer>{Integer(1)});
    CHECK(box.c0 == 1);

    AffineInequality tetra = hypermetric_inequality(
        {Integer(1), Integer(1), Integer(1), Integer(-1)});
    CHECK(tetra.c0 == 1);
    CHECK(tetra.evaluate(point_from(4, {Rational(0), Rational(0), Rational(1), Rational(0),
                                        Rational(1), Rational(1)})) == 3);

    AffineInequality deep = hypermetric_inequality(
        {Integer(1), Integer(1), Integer(1), Integer(1), Integer(-2)});
    CHECK(deep.c0 == 3);
}

TEST_CASE("cyclic inequality specializes to the tetrahedral facet at k = 2") {
    AffineInequality cyc = cyclic_inequality(2, 4);
    AffineInequality tetra = hypermetric_inequality(
        {Integer(1), Integer(1), Integer(1), Integer(-1)});
    CHECK(cyc.c == tetra.c);
    CHECK(cyc.c0 == tetra.c0);
}

TEST_CASE("cyclic inequality coefficients at k = 3") {
    AffineInequality cyc = cyclic_inequality(3, 6);
    const int expected[] = {-1, 0, 0, -1, 1, -1, 0, 0, 1, -1, 0, 1, -1, 1, 1};
    REQUIRE(cyc.c.size() == 15);
    for (std::size_t e = 0; e < 15; ++e) CHECK(cyc.c[e] == expected[e]);
    CHECK(cyc.c0 == 2);
    auto rec = recognize_hypermetric(cyc);
    CHECK(!rec.hypermetric);
}

TEST_CASE("recognition inverts the hypermetric construction") {
    std::vector<std::vector<int>> table{
        {1, 1, 0, 0, 0},  {1, 1, -1, 0, 0},   {1, 1, 1, -1, 0},  {1, 1, 1, 1, -1},
        {1, 1, 1, 1, -2}, {1, 1, 1, -1, -1},  {2, 1, 1, -1, -1},
    };
    for (const auto& raw : table) {
        std::vector<Integer> b(raw.begin(), raw.end());
        AffineInequality hm = hypermetric_inequality(b);
        auto rec = recognize_hypermetric(hm);
        REQUIRE(rec.hypermetric);
        CHECK(rec.b == b);
        CHECK(rec.q == 1);

        // positive scaling only changes the reported multiplier
        AffineInequality scaled = hm;
        for (Integer& e : scaled.c) e *= 7;
        scaled.c0 *= 7;
        auto rec7 = recognize_hypermetric(scaled);
        REQUIRE(rec7.hypermetric);
        CHECK(rec7.b == b);
        CHECK(rec7.q == Rational(1) / 7);
    }
}

TEST_CASE("recognition patterns on tiny supports") {
    AffineInequality pos(2, {Integer(-2)}, Integer(0));
    auto rec = recognize_hypermetric(pos);
    REQUIRE(rec.hypermetric);
    CHECK(rec.b == std::vector<Integer>{Integer(1), Integer(1)});
    CHECK(rec.q == half());

    AffineInequality box(2, {Integer(3)}, Integer(3));
    rec = recognize_hypermetric(box);
    REQUIRE(rec.hypermetric);
    CHECK(rec.b == std::vector<Integer>{Integer(1), Integer(-1)});

    // valid but only reachable with larger b; the recognizer stays modest
    AffineInequality wide(2, {Integer(1)}, Integer(2));
    rec = recognize_hypermetric(wide);
    CHECK(!rec.hypermetric);
    CHECK(!rec.reason.empty());

    AffineInequality zero(3, {Integer(0), Integer(0), Integer(0)}, Integer(0));
    rec = recognize_hypermetric(zero);
    REQUIRE(rec.hypermetric);
    CHECK(rec.q == 1);
}

TEST_CASE("recognition rejects non rank-one patterns") {
    AffineInequality perimeter(3, {Integer(1), Integer(1), Integer(1)}, Integer(2));
    CHECK(!recognize_hypermetric(perimeter).hypermetric);
    AffineInequality path(3, {Integer(1), Integer(1), Integer(0)}, Integer(1));
    CHECK(!recognize_hypermetric(path).hypermetric);
}

TEST_CASE("hypermetric scan flags an out-of-range pair value") {
    auto scan = hypermetric_valid_check(point_from(2, {Rational(2)}), 1);
    CHECK(!scan.all_satisfied);
    CHECK(scan.violating_b == std::vector<Integer>{Integer(1), Integer(-1)});
    CHECK(scan.lhs == 2);
    CHECK(scan.rhs == 1);
}

TEST_CASE("hypermetric scan tells the star point from the star plus cycle") {
    // the bare star violates b = (1,1,1,-1,0,0): bXb = 1 but |sum b| = 2
    HypermetricScan scan = hypermetric_valid_check(star_point(), 3);
    CHECK(!scan.all_satisfied);
    CHECK(scan.lhs > scan.rhs);
    AffineInequality viol = hypermetric_inequality(scan.violating_b);
    CHECK(viol.evaluate(star_point()) > viol.c0);

    // adding the five-cycle at one half repairs every hypermetric inequality
    CHECK(hypermetric_valid_check(star_plus_cycle_point(), 3).all_satisfied);
}

TEST_CASE("clique partition points") {
    auto p = combinat::SetPartition::normalized({{1, 2}, {3}}, 3);
    TcfPoint x = clique_partition_point(p, 3);
    CHECK(x.chi == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(all_clique_partition_points(4).size() == 15);
}

TEST_CASE("membership with witness on the half pair") {
    MembershipResult r = membership(point_from(2, {half()}));
    REQUIRE(r.member);
    CHECK(r.witness_theta.at(0b11u) == Rational(3) / 2);
    CHECK(ecf::is_completely_alternating(r.witness_theta).ok);
    CHECK(project_psi(r.witness_theta).chi == std::vector<Rational>{half()});
}

TEST_CASE("membership separators cut the query and keep the polytope") {
    for (Rational bad : {Rational(3) / 2, Rational(-1) / 4}) {
        MembershipResult r = membership(point_from(2, {bad}));
        REQUIRE(!r.member);
        CHECK(r.separator_lhs > Rational(r.separator.c0));
        // the two vertices of the segment must stay feasible
        CHECK(r.separator.satisfied_by(point_from(2, {Rational(0)})));
        CHECK(r.separator.satisfied_by(point_from(2, {Rational(1)})));
    }
}

TEST_CASE("all clique partition points are members") {
    for (const TcfPoint& x : all_clique_partition_points(4)) {
        MembershipResult r = membership(x);
        CHECK(r.member);
    }
}

TEST_CASE("members are closed under midpoints products and restrictions") {
    TcfPoint a = point_from(3, {Rational(1), Rational(0), Rational(0)});
    TcfPoint b = point_from(3, {Rational(0), Rational(0), Rational(1)});
    std::vector<Rational> mid_chi(3);
    for (std::size_t e = 0; e < 3; ++e) mid_chi[e] = (a.chi[e] + b.chi[e]) / 2;
    TcfPoint mid(3, std::move(mid_chi));
    CHECK(membership(mid).member);

    TcfPoint prod(3, std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    for (std::size_t e = 0; e < 3; ++e) prod.chi[e] = a.chi[e] * mid.chi[e];
    CHECK(membership(prod).member);

    TcfPoint sub = restrict_point(mid, 0b011u);
    CHECK(sub.n == 2);
    CHECK(membership(sub).member);
}

TEST_CASE("realization reproduces the tail conditionals") {
    TcfPoint x = point_from(2, {half()});
    Realization r = realize_binary(x);
    CHECK(r.kappa == Rational(3) / 2);
    CHECK(r.event_probability == Rational(2) / 3);
    CHECK(r.model.event_probability(1) == Rational(2) / 3);
    CHECK(r.model.event_probability(2) == Rational(2) / 3);
    CHECK(r.model.joint_probability(1, 2) / r.model.event_probability(2) == half());

    CHECK_THROWS_AS(realize_binary(point_from(2, {Rational(2)})), NotAMemberError);
    try {
        realize_binary(point_from(2, {Rational(2)}));
    } catch (const NotAMemberError& e) {
        CHECK(e.separator.satisfied_by(point_from(2, {Rational(1)})));
    }
}

TEST_CASE("lift and restrict round trip") {
    TcfPoint x = point_from(3, {half(), Rational(1) / 3, Rational(0)});
    TcfPoint up = lift_point(x, 6);
    CHECK(up.chi[EdgeIndexer(6).pos(1, 6)] == 0);
    CHECK(restrict_point(up, 0b000111u).chi == x.chi);

    AffineInequality q(3, {Integer(1), Integer(1), Integer(-1)}, Integer(1));
    AffineInequality uq = lift_inequality(q, 5);
    CHECK(uq.c[EdgeIndexer(5).pos(1, 2)] == 1);
    CHECK(uq.c[EdgeIndexer(5).pos(4, 5)] == 0);
    CHECK(uq.c0 == 1);
}

TEST_CASE("denominator constructions") {
    TcfPoint five_cycle = denominator_vertex(1, 2, DenominatorConstruction::I);
    CHECK(five_cycle.n == 5);
    std::vector<Rational> table_row{half(), Rational(0), Rational(0), half(), half(),
                                    Rational(0), Rational(0), half(),    Rational(0), half()};
    CHECK(combinat::canonical_representative(five_cycle.chi, 5) ==
          combinat::canonical_representative(table_row, 5));
    CHECK(membership(five_cycle).member);

    TcfPoint thirds = denominator_vertex(1, 3, DenominatorConstruction::II);
    CHECK(thirds.n == 9);
    bool has_third = false, has_two_thirds = false;
    for (const Rational& v : thirds.chi) {
        if (v == Rational(1) / 3) has_third = true;
        if (v == Rational(2) / 3) has_two_thirds = true;
    }
    CHECK(has_third);
    CHECK(has_two_thirds);
    CHECK(membership(thirds).member);

    CHECK_THROWS_AS(denominator_vertex(2, 4, DenominatorConstruction::I), BadPoint);
    CHECK_THROWS_AS(denominator_vertex(4, 4, DenominatorConstruction::II), BadPoint);
}

TEST_CASE("psd check with witness directions") {
    CHECK(is_psd(point_from(2, {Rational(1)})).psd);
    CHECK(is_psd(point_from(2, {Rational(0)})).psd);

    PsdResult bad = is_psd(point_from(2, {Rational(3) / 2}));
    REQUIRE(!bad.psd);
    CHECK(bad.witness == std::vector<Integer>{Integer(3), Integer(-2)});
    CHECK(bad.witness_value == -5);
    CHECK(quadratic_form(point_from(2, {Rational(3) / 2}), bad.witness) == bad.witness_value);
}

TEST_CASE("the star point is not positive semidefinite") {
    PsdResult r = is_psd(star_point());
    REQUIRE(!r.psd);
    CHECK(r.witness == std::vector<Integer>{Integer(1), Integer(1), Integer(1), Integer(1),
                                            Integer(1), Integer(-2)});
    CHECK(r.witness_value == -1);
}

TEST_CASE("inequality orbits and canonical forms") {
    AffineInequality pos12(3, {Integer(-1), Integer(0), Integer(0)}, Integer(0));
    auto orb = inequality_orbit(pos12);
    CHECK(orb.size() == 3);
    AffineInequality canon = canonical_inequality(pos12);
    for (const auto& q : orb) {
        CHECK(q.c0 == 0);
        CHECK(!(q.c < canon.c));
    }
}
