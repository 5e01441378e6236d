#ifndef TCFKIT_PIPELINE_HPP
#define TCFKIT_PIPELINE_HPP

/**
 * The long-running enumeration pipelines behind the CLI: vertex
 * enumeration of Theta_n, projection to TCF_n with orbit bookkeeping and
 * extremality filtering, and the facet routes (convex hull for n <= 5,
 * cut polytope generators for n = 6).  Everything is exact; the optional
 * wall-clock budget aborts with an exception that carries the stage name.
 */

#include "tcfkit/hull.hpp"
#include "tcfkit/setfunction.hpp"
#include "tcfkit/tcf.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace tcfkit::pipeline {

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(const std::string& stage_, std::chrono::milliseconds spent_)
        : std::runtime_error("budget exceeded during " + stage_ + " after " +
                             std::to_string(spent_.count()) + " ms"),
          stage(stage_),
          spent(spent_) {}
    std::string stage;
    std::chrono::milliseconds spent;
};

/** Wall-clock budget; a zero limit means unlimited. */
class Budget {
  public:
    Budget() = default;
    explicit Budget(std::chrono::milliseconds limit) : limit_(limit) {}

    bool limited() const { return limit_.count() > 0; }
    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
    }

    /** @throws BudgetExceeded once the limit has passed. */
    void checkpoint(const std::string& stage) const {
        if (limited() && elapsed() > limit_) throw BudgetExceeded(stage, elapsed());
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::milliseconds limit_{0};
};

/**
 * Run fn(0), ..., fn(count - 1) on up to `workers` threads with dynamic
 * dispatch.  The first exception thrown by any call stops the remaining
 * work and is rethrown on the caller's thread.
 */
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/** A vertex of Theta_n as the support of its spectral measure. */
struct LambdaVertex {
    std::vector<combinat::Subset> support;  // ascending masks
    std::vector<Rational> weights;          // aligned, strictly positive
};

/**
 * Enumerate all vertices of Theta_n, each exactly once, in a fixed order
 * independent of the worker count.
 *
 * Works in the isomorphic polytope of spectral weights {lambda >= 0,
 * sum_{K owns i} lambda_K = 1 for all i}: a vertex is determined by its
 * support, a family of independent indicator columns over which the
 * margin system has a strictly positive solution, and no proper subfamily
 * of a vertex support already spans the margin vector.  A depth-first
 * scan over supports in ascending mask order therefore reaches every
 * vertex exactly once and can stop extending a branch as soon as the
 * margins are spanned.  All elimination is fraction-free over machine
 * integers (every intermediate value is a minor of a 0/1 matrix).
 *
 * @throws tcf::UnsupportedSize for n outside [2,6].
 */
void for_each_theta_vertex(int n, const std::function<void(const LambdaVertex&)>& visit,
                           const Budget& budget = {}, int workers = 1);

/** Dense set function of a spectral vertex: theta(A) = sum_{K meets A} lambda_K. */
ecf::SetFunction theta_of(int n, const LambdaVertex& v);

/** Projection to pair coordinates: chi_ij = 2 - theta({i,j}). */
tcf::TcfPoint project_lambda(int n, const LambdaVertex& v);

/** Materialized vertices of Theta_n in support form. */
std::vector<LambdaVertex> theta_vertices(int n, const Budget& budget = {}, int workers = 1);

/**
 * Vertices of Theta_n by double description on the alternation H-rep,
 * as coordinate vectors over the subsets with at least two elements
 * (masks ascending).  Checks that no recession ray shows up.
 */
std::vector<std::vector<Rational>> theta_vertices_dd(int n);

struct ThetaSummary {
    int n = 0;
    long vertices = 0;
    long vertex_orbits = 0;
    long facets = 0;  // rows of the alternation H-rep (all facets)
};

/** Vertex, orbit and facet counts of Theta_n. */
ThetaSummary theta_summary(int n, const Budget& budget = {}, int workers = 1);

/** Orbit count of the alternation H-rep rows under relabeling. */
long theta_facet_orbits(int n);

struct VertexOrbitRow {
    tcf::TcfPoint representative;  // lexicographically smallest in its orbit
    long orbit_length = 0;
    std::string value_set;  // e.g. "{0,1/2}", ascending distinct values
};

struct VertexSummary {
    int n = 0;
    long theta_vertices = 0;
    long projected_distinct = 0;  // after projection and deduplication
    long projected_orbits = 0;
    std::vector<VertexOrbitRow> orbits;  // extreme point orbits, sorted by representative
    long vertices = 0;                   // total extreme points
};

/**
 * The vertex pipeline: enumerate Theta_n, project every vertex to its
 * pair coordinates, deduplicate, group into permutation orbits, and keep
 * the orbits of extreme points.  For n <= 5 one membership LP per orbit
 * against all projected points settles extremality; n = 6 uses the
 * two-stage filter seeded by the clique partition orbits and the lifted
 * non-integer orbits of TCF_5.
 */
VertexSummary tcf_vertices(int n, const Budget& budget = {}, int workers = 1);

/** Expand the orbit rows back into the full vertex list. */
std::vector<tcf::TcfPoint> expand_vertex_orbits(const VertexSummary& summary);

struct FacetOrbitRow {
    tcf::AffineInequality representative;  // lexicographically smallest in its orbit
    int generator = 0;  // 1-based ancestral cut generator (n = 6), 0 for the hull route
    long orbit_length = 0;
    long tight_vertices = 0;
    bool hypermetric = false;
    std::vector<Integer> b;  // filled when hypermetric
};

struct FacetSummary {
    int n = 0;
    long facets = 0;
    std::vector<FacetOrbitRow> orbits;
    long hypermetric_facets = 0;
    long hypermetric_orbits = 0;
};

/**
 * The facet pipeline.  For n <= 5 the facets come from the convex hull
 * of the computed vertices; for n = 6 from expanding the cut polytope
 * generators, pulling every facet of CUT_7 back to TCF_6, grouping the
 * distinct rows into orbits, and certifying each representative against
 * the computed vertices.  Pullbacks that are valid but meet the polytope
 * in a lower-dimensional face are dropped during certification, so the
 * summary lists genuine facets only.
 */
FacetSummary tcf_facets(int n, const Budget& budget = {}, int workers = 1);

/** The n = 6 generator route with explicit generators and vertex list. */
FacetSummary tcf_facets_from_generators(const std::vector<tcf::AffineInequality>& generators,
                                        const std::vector<tcf::TcfPoint>& vertices,
                                        const Budget& budget = {}, int workers = 1);

}  // namespace tcfkit::pipeline

#endif  // TCFKIT_PIPELINE_HPP
