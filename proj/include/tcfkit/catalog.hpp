#ifndef TCFKIT_CATALOG_HPP
#define TCFKIT_CATALOG_HPP

#include "tcfkit/tcf.hpp"

#include <vector>

namespace tcfkit::catalog {

/** Reference counts for TCF_n and Theta_n, n in [2,6]. */
struct Counts {
    long vertices = 0;
    long facets = 0;
    long vertex_orbits = 0;
    long facet_orbits = 0;
};

Counts tcf_counts(int n);
Counts theta_counts(int n);

/** Facet count of CUT_{n+1} for n in [2,6]: 4, 16, 56, 368, 116764. */
long cut_facet_count(int n);

struct VertexOrbit {
    tcf::TcfPoint representative;
    long orbit_length = 0;
};

/**
 * Permutation orbit representatives for the extreme points of TCF_n,
 * n in [2,6]. Small cases are generated from clique partitions, n = 5
 * and n = 6 are stored tables (11 and 88 rows).
 */
const std::vector<VertexOrbit>& vertex_orbit_table(int n);

struct HypermetricFacet {
    std::vector<Integer> b;
    long orbit_length = 0;
    bool at_v0 = false;
    bool at_v1 = false;
};

/**
 * For n <= 5 every facet of TCF_n is hypermetric; this is the complete
 * orbit table as b-vectors. For n = 6 it lists the 17 hypermetric orbits
 * out of 67 (in the same order as the generator-grouped facet table).
 */
const std::vector<HypermetricFacet>& hypermetric_facet_table(int n);

struct FacetOrbit {
    tcf::AffineInequality representative;
    int generator = 0;        // ancestral CUT_7 generator, 1..11
    long tight_vertices = 0;  // extreme points of TCF_6 meeting it with equality
    long orbit_length = 0;
};

/** The 67 facet orbits of TCF_6, grouped by ancestral generator. */
const std::vector<FacetOrbit>& tcf6_facet_table();

/** Facet orbit representatives of TCF_n as inequalities, n in [2,6]. */
const std::vector<tcf::AffineInequality>& facet_orbit_representatives(int n);

/** Full facet list by orbit expansion: 2, 6, 22, 110, 18720 rows. */
const std::vector<tcf::AffineInequality>& stored_facets(int n);

/** Full vertex list by orbit expansion: 2, 5, 15, 214, 28895 points. */
const std::vector<tcf::TcfPoint>& stored_vertices(int n);

/**
 * The 11 homogeneous generators for the 116764 facets of CUT_7, as
 * inequalities sum c_ij x_ij <= 0 on K_7. Expanding each orbit under
 * switchings and permutations and taking the union yields every facet.
 */
const std::vector<tcf::AffineInequality>& cut7_generators();

/** Facets violated by x among stored_facets(n), useful for fast screening. */
std::vector<tcf::AffineInequality> violated_stored_facets(const tcf::TcfPoint& x);

/**
 * Membership with facet screening.  For n in [2,6] the stored facet list
 * is complete, so a violated facet refutes membership immediately; the
 * separator is then the most violated stored facet (ties broken by the
 * lexicographically smallest coefficient row).  Points that pass the
 * screen, and all sizes without stored facets, go through the exact
 * membership LP.
 */
tcf::MembershipResult checked_membership(const tcf::TcfPoint& x);

}  // namespace tcfkit::catalog

#endif  // TCFKIT_CATALOG_HPP
