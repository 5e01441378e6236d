#ifndef TCFKIT_SETFUNCTION_HPP
#define TCFKIT_SETFUNCTION_HPP

/**
 * Set functions on {1..n} and the extremal-coefficient machinery built on
 * them: iterated alternating differences, the complete-alternation test,
 * the inequality description of the normalized completely alternating
 * functions, spectral weights of max-stable models with unit Frechet
 * margins, and exchange between capacities and binary-vector models.
 */

#include "tcfkit/combinat.hpp"
#include "tcfkit/rational.hpp"

#include <vector>

namespace tcfkit::ecf {

using combinat::Subset;

class OverlappingSets : public std::runtime_error {
  public:
    explicit OverlappingSets(const std::string& what) : std::runtime_error(what) {}
};

class NotInTheta : public std::runtime_error {
  public:
    explicit NotInTheta(const std::string& what) : std::runtime_error(what) {}
};

class NotACapacity : public std::runtime_error {
  public:
    explicit NotACapacity(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveCoordinate : public std::runtime_error {
  public:
    explicit NonPositiveCoordinate(const std::string& what) : std::runtime_error(what) {}
};

/** Dense set function: one rational per subset bitmask of {1..n}. */
struct SetFunction {
    int n = 0;
    std::vector<Rational> values;  // size 2^n, indexed by mask

    SetFunction() = default;
    explicit SetFunction(int n_) : n(n_), values((std::size_t)1 << n_, Rational(0)) {}

    const Rational& at(Subset a) const { return values[a]; }
    Rational& at(Subset a) { return values[a]; }

    /** f with values[empty] = 0 and values[{i}] = 1, rest zero. */
    static SetFunction ecf_normalized_zero(int n_) {
        SetFunction f(n_);
        for (int i = 0; i < n_; ++i) f.values[(std::size_t)1 << i] = 1;
        return f;
    }

    bool ecf_normalized() const {
        if (values[0] != 0) return false;
        for (int i = 0; i < n; ++i)
            if (values[(std::size_t)1 << i] != 1) return false;
        return true;
    }
};

/**
 * Iterated alternating difference of f: with L = {l_1,...,l_k} this is
 * -(D_{l_1} ... D_{l_k} f)(K) where (D_l f)(A) = f(A) - f(A + {l}),
 * i.e. the alternating sum  sum_{I subset L} (-1)^{|I|+1} f(K union I).
 *
 * @throws OverlappingSets unless K and L are disjoint.
 */
Rational alternation_value(const SetFunction& f, Subset K, Subset L);

struct AlternationCheck {
    bool ok = true;
    Subset violating_L = 0;  // meaningful when !ok
    Rational value = 0;      // the negative alternation at the violation
};

/**
 * Complete alternation test.  On a finite ground set it is enough to test
 * the alternating sums with K equal to the complement of L, one for each
 * nonempty L; the first failure (in mask order) is reported.
 */
AlternationCheck is_completely_alternating(const SetFunction& f);

/**
 * Inequality description of the polytope of ECF-normalized completely
 * alternating set functions, over the coordinates theta(A), |A| >= 2
 * (masks ascending).  Rows are integer, gcd 1, sense <=, with exact
 * duplicates removed (for n = 2 two of the three raw rows coincide).
 */
struct ThetaHRep {
    int n = 0;
    std::vector<Subset> coords;              // column labels
    std::vector<std::vector<Rational>> rows;  // coefficient rows
    std::vector<Rational> rhs;
    std::vector<Subset> row_label;           // the L generating each row
};

ThetaHRep theta_h_representation(int n);

/** Spectral weights of the max-stable model attached to a point of Theta_n. */
struct TmSpectralWeights {
    int n = 0;
    std::vector<Rational> lambda;  // indexed by mask; lambda[0] stays 0
};

/**
 * Weights lambda_K = alternation of theta at (complement K, K).  These are
 * the masses of the discrete spectral measure realizing theta; they are
 * nonnegative exactly on Theta_n and satisfy sum_{K owns i} lambda_K = 1.
 *
 * @throws NotInTheta if theta is not ECF-normalized completely alternating.
 */
TmSpectralWeights tm_weights(const SetFunction& theta);

/** Rebuild theta from weights: theta(A) = sum_{K meets A} lambda_K. */
SetFunction theta_from_weights(const TmSpectralWeights& w);

/**
 * -log P(X_1 <= x_1, ..., X_n <= x_n) for the associated max-stable vector
 * with unit Frechet margins: sum_K lambda_K max_{j in K} 1/x_j.
 *
 * @throws NonPositiveCoordinate unless every x_j > 0.
 */
Rational tm_neg_log_cdf(const TmSpectralWeights& w, const std::vector<Rational>& x);

/**
 * A binary random vector given by the masses of its value patterns:
 * mass[S] = P(Y_i = 1 exactly for i in S).  The event A_i is {Y_i = 1}.
 */
struct BinaryModel {
    int n = 0;
    std::vector<Rational> mass;  // size 2^n, sums to 1

    Rational event_probability(int i) const;
    /** P(union of A_i, i in A). */
    Rational capacity_value(Subset a) const;
    /** P(A_i and A_j). */
    Rational joint_probability(int i, int j) const;
};

/**
 * Invert a capacity into pattern masses by Moebius inversion:
 * mass[S] = sum_{R subset S} (-1)^{|S minus R|} (1 - C(complement R)).
 *
 * @throws NotACapacity if C(empty) != 0 or some mass comes out negative
 *         (equivalently, C is not completely alternating with C <= 1).
 */
BinaryModel capacity_to_distribution(const SetFunction& c);

}  // namespace tcfkit::ecf

#endif  // TCFKIT_SETFUNCTION_HPP
