#ifndef TCFKIT_HULL_HPP
#define TCFKIT_HULL_HPP

/**
 * Generic exact polyhedral computations in small dimension: double
 * description for vertex and facet enumeration, extreme point filtering,
 * and facet certification by rank of the tight set.
 */

#include "tcfkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace tcfkit::hull {

class NotPointed : public std::runtime_error {
  public:
    explicit NotPointed(const std::string& what) : std::runtime_error(what) {}
};

/** Inequality description a_r . x <= b_r. */
struct HRep {
    int dim = 0;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;

    void add(std::vector<Rational> row, Rational rhs) {
        a.push_back(std::move(row));
        b.push_back(std::move(rhs));
    }
};

/** Generator description; rays are primitive integer directions. */
struct VRep {
    int dim = 0;
    std::vector<std::vector<Rational>> vertices;
    std::vector<std::vector<Rational>> rays;
};

/**
 * Extreme rays of the pointed cone {y : a_r . y >= 0}, by double
 * description with insertion in row order and combinatorial adjacency.
 * Rays come out as primitive integer vectors, sorted.
 *
 * @throws NotPointed if the rows do not have full column rank.
 */
std::vector<std::vector<Rational>> extreme_rays(int dim,
                                                const std::vector<std::vector<Rational>>& rows);

/** Vertices (and recession rays, if any) of {x : a x <= b} by homogenization. */
VRep dd_vertices(const HRep& h);

/**
 * Facets of the convex hull of full-dimensional point set, through the
 * polar cone {(a0, a) : a0 + a . p >= 0 for all p}.  Rows are normalized
 * to primitive integers.
 */
HRep hull_facets(int dim, const std::vector<std::vector<Rational>>& points);

/** Indices of the points that are not convex combinations of the others. */
std::vector<std::size_t> filter_extreme(const std::vector<std::vector<Rational>>& points);

/** Rank of the matrix with rows (1, p) over the given points. */
std::size_t homogeneous_rank(const std::vector<std::vector<Rational>>& points, int dim);

struct FacetCheck {
    bool valid = true;                 // a . x <= b everywhere
    std::size_t violated_index = 0;    // first violator when invalid
    std::vector<std::size_t> tight;    // indices attaining equality
    std::size_t tight_rank = 0;        // homogeneous rank of the tight set
    bool is_facet = false;             // valid and tight_rank == dim
};

/**
 * Certify that a . x <= b induces a facet of the convex hull of a
 * full-dimensional point set: validity plus a tight set of affine
 * dimension dim - 1.
 */
FacetCheck certify_facet(const std::vector<Rational>& a, const Rational& b,
                         const std::vector<std::vector<Rational>>& points, int dim);

}  // namespace tcfkit::hull

#endif  // TCFKIT_HULL_HPP
