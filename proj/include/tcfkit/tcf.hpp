#ifndef TCFKIT_TCF_HPP
#define TCFKIT_TCF_HPP

/**
 * The polytope TCF_n of n x n tail correlation matrices, handled through
 * edge vectors chi over K_n.  Membership, realization by equal-probability
 * binary models, hypermetric inequalities and their recognition, clique
 * partition points, liftings and restrictions, the small-denominator
 * vertex constructions, the cyclic non-hypermetric inequality, and the
 * positive-semidefiniteness check live here.
 */

#include "tcfkit/combinat.hpp"
#include "tcfkit/rational.hpp"
#include "tcfkit/setfunction.hpp"

#include <optional>
#include <vector>

namespace tcfkit::tcf {

using combinat::EdgeIndexer;
using combinat::SetPartition;
using combinat::Subset;

class BadPoint : public std::runtime_error {
  public:
    explicit BadPoint(const std::string& what) : std::runtime_error(what) {}
};

class BadInequality : public std::runtime_error {
  public:
    explicit BadInequality(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedSize : public std::runtime_error {
  public:
    explicit UnsupportedSize(const std::string& what) : std::runtime_error(what) {}
};

/** A candidate tail correlation matrix as an edge vector over K_n. */
struct TcfPoint {
    int n = 0;
    std::vector<Rational> chi;  // EdgeIndexer order

    TcfPoint() = default;
    TcfPoint(int n_, std::vector<Rational> chi_);

    const Rational& at(int i, int j) const { return chi[EdgeIndexer(n).pos(i, j)]; }

    bool operator==(const TcfPoint& other) const { return n == other.n && chi == other.chi; }
};

/** Inequality sum_{i<j} c_ij x_ij <= c0 over edge vectors of K_n. */
struct AffineInequality {
    int n = 0;
    std::vector<Integer> c;  // EdgeIndexer order
    Integer c0 = 0;
    std::string name;  // optional, carried through I/O

    AffineInequality() = default;
    AffineInequality(int n_, std::vector<Integer> c_, Integer c0_, std::string name_ = {});

    Rational evaluate(const TcfPoint& x) const;
    bool satisfied_by(const TcfPoint& x) const { return evaluate(x) <= Rational(c0); }
    bool tight_at(const TcfPoint& x) const { return evaluate(x) == Rational(c0); }

    /** Divide by the gcd of all coefficients and the constant (sense kept). */
    AffineInequality normalized() const;

    /** Exact rational row scaled to primitive integers, sense <=. */
    static AffineInequality from_rational(int n, const std::vector<Rational>& c,
                                          const Rational& c0, std::string name = {});

    bool operator==(const AffineInequality& other) const {
        return n == other.n && c == other.c && c0 == other.c0;
    }
};

/** Relabeled inequality: coefficient of {i,j} becomes that of {s(i),s(j)}. */
AffineInequality act(const combinat::Permutation& sigma, const AffineInequality& q);

/** Lexicographically smallest relabeling (coefficient tuple then constant). */
AffineInequality canonical_inequality(const AffineInequality& q);

/** Full orbit of an inequality under S_n, sorted, duplicates removed. */
std::vector<AffineInequality> inequality_orbit(const AffineInequality& q);

/** chi_ij = 2 - theta({i,j}).  Requires theta to be ECF-normalized. */
TcfPoint project_psi(const ecf::SetFunction& theta);

/**
 * The hypermetric inequality of an integer vector b:
 *   sum_{i<j} (-b_i b_j) x_ij <= (1/2) sum_i b_i (b_i - 1).
 * b must not be all zero.  The row is returned unscaled.
 */
AffineInequality hypermetric_inequality(const std::vector<Integer>& b);

struct HypermetricScan {
    bool all_satisfied = true;
    std::vector<Integer> violating_b;  // meaningful when !all_satisfied
    Rational lhs = 0, rhs = 0;         // of the violated inequality
};

/**
 * Check every hypermetric inequality with max |b_i| <= bound against x.
 * b and -b give equivalent tests, so only one of each pair is scanned.
 */
HypermetricScan hypermetric_valid_check(const TcfPoint& x, int bound);

struct HypermetricRecognition {
    bool hypermetric = false;
    std::vector<Integer> b;
    Rational q = 0;      // q * (c, c0) is exactly the b-form, q > 0
    std::string reason;  // explanation when not recognized
};

/**
 * Decide whether the inequality is a positive multiple of a hypermetric
 * inequality and recover b.  The support of the coefficients must span a
 * complete subgraph; b_k^2 is reconstructed from coefficient ratios and
 * the constant term fixes the scale.  Supports of size <= 2 are handled
 * by direct pattern match (positivity rows and x_ij <= 1); anything else
 * that small is reported unrecognized with a reason.
 */
HypermetricRecognition recognize_hypermetric(const AffineInequality& q);

/** Edge vector with x_ij = 1 exactly when i and j share a block. */
TcfPoint clique_partition_point(const SetPartition& partition, int n);

/** All clique partition points of K_n (one per set partition). */
std::vector<TcfPoint> all_clique_partition_points(int n);

struct MembershipResult {
    bool member = false;
    // member: a realizing normalized completely alternating witness
    ecf::SetFunction witness_theta;
    ecf::TmSpectralWeights witness_weights;
    // nonmember: an inequality valid on all of TCF_n and violated by x
    AffineInequality separator;
    Rational separator_lhs = 0;  // separator evaluated at x
};

/**
 * Exact membership test.  Solves the feasibility system for nonnegative
 * spectral weights lambda over nonempty subsets with unit singleton
 * margins and pair margins 2 - chi_ij; this is the inequality description
 * of the completely alternating extension problem, reparametrized through
 * the spectral weights.  Infeasibility turns the Farkas multipliers on
 * the margin rows into a separating inequality.
 */
MembershipResult membership(const TcfPoint& x);

class NotAMemberError : public std::runtime_error {
  public:
    NotAMemberError(const std::string& what, AffineInequality sep)
        : std::runtime_error(what), separator(std::move(sep)) {}
    AffineInequality separator;
};

struct Realization {
    ecf::BinaryModel model;
    ecf::TmSpectralWeights weights;
    ecf::SetFunction theta;
    Rational kappa = 0;            // theta of the full set
    Rational event_probability = 0;  // common value 1/kappa
};

/**
 * Realize a member as the tail correlation structure of equal-probability
 * events: take a membership witness theta, rescale the capacity C =
 * theta/kappa with kappa = theta(full set), and invert it into pattern
 * masses.  Then P(A_i) = 1/kappa for every i and the pair conditionals
 * reproduce chi exactly.
 *
 * @throws NotAMemberError (with separator) when x is not in TCF_n.
 */
Realization realize_binary(const TcfPoint& x);

/** Extend by isolated vertices: new coordinates chi_{i,v} = 0. */
TcfPoint lift_point(const TcfPoint& x, int target_n);

/** Extend an inequality by zero coefficients; validity is preserved. */
AffineInequality lift_inequality(const AffineInequality& q, int target_n);

/** Principal restriction to a subset (relabeled in increasing order). */
TcfPoint restrict_point(const TcfPoint& x, Subset a);

enum class DenominatorConstruction { I, II };

/**
 * The explicit small-denominator extremal constructions.
 *
 * Construction I (k in {1, m-1}, m >= 2) lives on n = 2m+1 vertices and
 * takes values in {0, 1/m, (m-1)/m}; for m = 2 it is the five-cycle of
 * halves.  Construction II (1 <= k <= m-1) lives on n = 2m+3 vertices and
 * additionally contains the values k/m and (m-k)/m.
 */
TcfPoint denominator_vertex(int k, int m, DenominatorConstruction which);

/**
 * The cyclic inequality on 2k vertices, lifted to K_n (n >= 2k):
 *   sum_{i=1}^{2k-1} x_{i,2k} - sum over the cycle (1 2 ... 2k-1) of
 *   x_{i,i+1}  <=  k - 1.
 * For k = 2 this is a hypermetric facet; for k >= 3 it is not hypermetric.
 */
AffineInequality cyclic_inequality(int k, int n);

struct PsdResult {
    bool psd = true;
    std::vector<Integer> witness;  // integer a with a X a^T < 0 when !psd
    Rational witness_value = 0;
};

/**
 * Positive semidefiniteness of the symmetric matrix with unit diagonal
 * and off-diagonal entries x_ij.  Decided by scanning all principal
 * minors (smallest subsets first, early exit); a failing matrix also gets
 * an explicit integer witness direction found by symmetric elimination.
 */
PsdResult is_psd(const TcfPoint& x);

/** Quadratic form a X a^T of the unit-diagonal matrix of x. */
Rational quadratic_form(const TcfPoint& x, const std::vector<Integer>& a);

struct SpindleHRep {
    std::vector<AffineInequality> at_v0;     // facets through the all-zeros vertex
    std::vector<AffineInequality> at_v1;     // facets through the all-ones vertex
    std::vector<AffineInequality> elsewhere;  // the rest
    std::vector<bool> at_v0_pure;            // pure hypermetric flags, aligned
    std::vector<bool> at_v1_pure;
};

/**
 * The stored facet description of TCF_n (n <= 6) grouped by incidence at
 * the two apexes v0 (all zeros) and v1 (all ones), with pure-hypermetric
 * flags (b with entries in {-1,0,1}).
 *
 * @throws UnsupportedSize for n > 6.
 */
SpindleHRep spindle_h_representation(int n);

}  // namespace tcfkit::tcf

#endif  // TCFKIT_TCF_HPP
