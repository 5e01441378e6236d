#ifndef TCFKIT_CUTCOR_HPP
#define TCFKIT_CUTCOR_HPP

/**
 * The cut polytope side.  CUT_m is the convex hull of the cut vectors
 * delta(S) of the complete graph K_m; the correlation polytope COR_n is
 * the convex hull of (b, b b^T) over binary b.  The covariance mapping
 * links the two, and TCF_n sits inside CUT_{n+1} as the slice with all
 * apex coordinates equal to 1/n.  Facets of CUT_{n+1} pull back to valid
 * inequalities of TCF_n, and the symmetry group of CUT (relabelings plus
 * switchings) expands single generators into whole facet orbits.
 *
 * Inequalities over E_m reuse tcf::AffineInequality with n = m; only the
 * interpretation of the coordinates differs.
 */

#include "tcfkit/rational.hpp"
#include "tcfkit/tcf.hpp"

#include <vector>

namespace tcfkit::cutcor {

using combinat::Subset;
using tcf::AffineInequality;
using tcf::TcfPoint;

/** delta(S) over E_m: 1 on edges cut by S, else 0. */
std::vector<Rational> cut_vector(Subset s, int m);

/** All 2^(m-1) distinct cut vectors (S ranges over subsets avoiding m). */
std::vector<std::vector<Rational>> all_cut_vectors(int m);

/** A point of the correlation polytope: singleton and pair moments. */
struct CorrelationPoint {
    int n = 0;
    std::vector<Rational> p;  // p_i, size n
    std::vector<Rational> q;  // p_ij over E_n, EdgeIndexer order

    CorrelationPoint() = default;
    CorrelationPoint(int n_, std::vector<Rational> p_, std::vector<Rational> q_);
};

/**
 * Covariance mapping COR_n -> CUT_{n+1}:
 *   x_{i,n+1} = p_i,   x_ij = p_i + p_j - 2 p_ij.
 */
std::vector<Rational> covariance_map(const CorrelationPoint& y);

/** Inverse of the covariance mapping. */
CorrelationPoint covariance_map_inverse(const std::vector<Rational>& x, int n);

/** The slice embedding TCF_n -> COR_n: p_i = 1/n, p_ij = chi_ij / n. */
CorrelationPoint correlation_embedding(const TcfPoint& x);

/** Composition into CUT_{n+1}: apex edges 1/n, inner edges (2 - 2 chi)/n. */
std::vector<Rational> cut_embedding(const TcfPoint& x);

/** Inverse of cut_embedding on the slice; checks the apex coordinates. */
TcfPoint cut_embedding_inverse(const std::vector<Rational>& x, int n);

/**
 * Switching by S: flips the coefficient sign on edges cut by S and moves
 * their sum into the constant,
 *   c'_e = (1 - 2 delta(S)_e) c_e,   c0' = c0 - sum_e delta(S)_e c_e.
 * Maps valid inequalities of CUT_m to valid inequalities (delta(T) goes
 * to delta(T symmetric-difference S)).
 */
AffineInequality switch_inequality(const AffineInequality& q, Subset s);

/**
 * Pull a valid inequality of CUT_{n+1} back through the slice embedding:
 *   sum_{i<j<=n} (-2 c_ij) chi_ij <= n c0 - 2 sum_{i<j<=n} c_ij - sum_i c_{i,n+1}.
 * The result is gcd-normalized.
 */
AffineInequality pull_back_to_tcf(const AffineInequality& cut_inequality);

/**
 * Full orbit of an inequality of CUT_m under relabelings and switchings,
 * grown breadth-first from adjacent transpositions and single-vertex
 * switchings, deduplicated by the normalized coefficient tuple.  Output
 * is sorted.
 */
std::vector<AffineInequality> expand_generator(const AffineInequality& generator);

}  // namespace tcfkit::cutcor

#endif  // TCFKIT_CUTCOR_HPP
