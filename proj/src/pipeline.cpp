#include "tcfkit/pipeline.hpp"

#include "tcfkit/catalog.hpp"
#include "tcfkit/cutcor.hpp"
#include "tcfkit/linprog.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace tcfkit::pipeline {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t spawn = std::min<std::size_t>((std::size_t)workers, count);
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (std::size_t w = 0; w < spawn; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

// ---------------------------------------------------------------------------
// Spectral vertex enumeration.
//
// A vertex of the weight polytope {lambda >= 0, sum_{K owns i} lambda_K = 1}
// is a support S of independent indicator columns whose margin system has a
// strictly positive solution, and no proper subfamily of S already spans the
// all-ones margin vector.  Supports are scanned depth first in ascending mask
// order; a branch stops as soon as the margins are spanned, which by the
// subfamily property visits every vertex support exactly once.
//
// The elimination state keeps, for each basis column, its Bareiss-reduced
// margin block together with its expression in the chosen columns, and the
// running reduction of the margin vector.  Every entry is a minor of a 0/1
// matrix of size at most seven, so machine integers are nowhere near
// overflow and all divisions are exact.
// ---------------------------------------------------------------------------

constexpr int kMaxN = 6;
constexpr int kCoef = kMaxN;        // offset of the coefficient block
constexpr int kAlpha = 2 * kMaxN;   // offset of the margin multiplier
constexpr int kWidth = 2 * kMaxN + 1;

struct SmallVertex {
    int size = 0;
    std::array<std::uint32_t, kMaxN> masks{};  // ascending support
    std::array<std::int64_t, kMaxN> numer{};   // weight numerators over denom
    std::int64_t denom = 1;
};

struct Echelon {
    int n = 0;
    int rank = 0;
    std::array<std::array<std::int64_t, kWidth>, kMaxN> rows{};
    std::array<int, kMaxN> pivot{};
    std::array<std::int64_t, kMaxN + 1> pivval{};  // pivval[0] = 1, then the pivots
    std::array<std::int64_t, kWidth> target{};     // reduced margin row
    bool spanned = false;
};

Echelon echelon_root(int n) {
    Echelon e;
    e.n = n;
    e.pivval[0] = 1;
    for (int j = 0; j < n; ++j) e.target[j] = 1;
    e.target[kAlpha] = 1;
    return e;
}

/** Reduce the indicator column of mask against the basis; false when dependent. */
bool reduce_column(const Echelon& e, std::uint32_t mask, std::array<std::int64_t, kWidth>& out,
                   int& piv) {
    out.fill(0);
    for (int i = 0; i < e.n; ++i) out[i] = (std::int64_t)((mask >> i) & 1u);
    out[kCoef + e.rank] = 1;
    for (int r = 0; r < e.rank; ++r) {
        const auto& row = e.rows[r];
        const std::int64_t a = e.pivval[r + 1];
        const std::int64_t b = out[e.pivot[r]];
        const std::int64_t p = e.pivval[r];
        for (int j = 0; j < kWidth; ++j) out[j] = (a * out[j] - b * row[j]) / p;
    }
    piv = -1;
    for (int j = 0; j < e.n; ++j)
        if (out[j] != 0) {
            piv = j;
            break;
        }
    return piv >= 0;
}

void push_row(Echelon& e, const std::array<std::int64_t, kWidth>& row, int piv) {
    const int r = e.rank;
    e.rows[r] = row;
    e.pivot[r] = piv;
    e.pivval[r + 1] = row[piv];
    const std::int64_t a = row[piv];
    const std::int64_t b = e.target[piv];
    const std::int64_t p = e.pivval[r];
    for (int j = 0; j < kWidth; ++j) e.target[j] = (a * e.target[j] - b * row[j]) / p;
    e.rank = r + 1;
    bool zero = true;
    for (int j = 0; j < e.n; ++j)
        if (e.target[j] != 0) {
            zero = false;
            break;
        }
    e.spanned = zero;
}

/**
 * Once the margins are spanned, 0 = alpha * 1 + sum_s coef_s * col_s, so the
 * weights are lambda_s = -coef_s / alpha.  False unless strictly positive.
 */
bool extract_vertex(const Echelon& e, const std::array<std::uint32_t, kMaxN>& masks,
                    SmallVertex& v) {
    const std::int64_t alpha = e.target[kAlpha];
    const std::int64_t sign = alpha > 0 ? 1 : -1;
    v.size = e.rank;
    v.denom = alpha * sign;
    for (int s = 0; s < e.rank; ++s) {
        const std::int64_t num = -e.target[kCoef + s] * sign;
        if (num <= 0) return false;
        v.numer[s] = num;
        v.masks[s] = masks[s];
    }
    return true;
}

struct Scan {
    int n = 0;
    std::uint32_t full = 0;
    const Budget* budget = nullptr;
    const char* stage = nullptr;
    const std::function<void(const SmallVertex&)>* emit = nullptr;
    std::uint64_t counter = 0;
    std::array<Echelon, kMaxN + 1> levels;
    std::array<std::uint32_t, kMaxN> masks{};

    void candidate(int level, std::uint32_t m) {
        if ((++counter & 0x3FFFFu) == 0) budget->checkpoint(stage);
        std::array<std::int64_t, kWidth> row;
        int piv = -1;
        if (!reduce_column(levels[level], m, row, piv)) return;
        Echelon& next = levels[level + 1];
        next = levels[level];
        masks[level] = m;
        push_row(next, row, piv);
        if (next.spanned) {
            SmallVertex v;
            if (extract_vertex(next, masks, v)) (*emit)(v);
        } else if (next.rank < n) {
            for (std::uint32_t k = m + 1; k <= full; ++k) candidate(level + 1, k);
        } else {
            throw std::logic_error("full rank without spanning the margins");
        }
    }
};

void lambda_scan(int n, const std::function<void(const SmallVertex&)>& emit, const Budget& budget,
                 int workers, const char* stage) {
    if (n < 2 || n > kMaxN)
        throw tcf::UnsupportedSize("vertex enumeration supports n between 2 and 6");
    const std::uint32_t full = combinat::full_mask(n);
    if (workers <= 1) {
        Scan scan;
        scan.n = n;
        scan.full = full;
        scan.budget = &budget;
        scan.stage = stage;
        scan.emit = &emit;
        scan.levels[0] = echelon_root(n);
        for (std::uint32_t m = 1; m <= full; ++m) scan.candidate(0, m);
        return;
    }
    // One task per first support mask; buffering keeps the emission order
    // identical to the serial scan no matter how the tasks interleave.
    std::vector<std::vector<SmallVertex>> buffers(full);
    parallel_for(full, workers, [&](std::size_t t) {
        budget.checkpoint(stage);
        std::vector<SmallVertex>& bucket = buffers[t];
        std::function<void(const SmallVertex&)> sink = [&bucket](const SmallVertex& v) {
            bucket.push_back(v);
        };
        Scan scan;
        scan.n = n;
        scan.full = full;
        scan.budget = &budget;
        scan.stage = stage;
        scan.emit = &sink;
        scan.levels[0] = echelon_root(n);
        scan.candidate(0, (std::uint32_t)t + 1);
    });
    for (const auto& bucket : buffers)
        for (const auto& v : bucket) emit(v);
}

// ---------------------------------------------------------------------------
// Packed coordinates.  Every coordinate that shows up in these pipelines is
// a reduced fraction a/b with 0 <= a and b bounded by the largest minor of a
// 0/1 matrix of the relevant size, far below 32, so a coordinate packs into
// a*33 + b inside sixteen bits.  Packed vectors make deduplication and the
// canonical-form search over all relabelings cheap.
// ---------------------------------------------------------------------------

constexpr std::int64_t kDenLimit = 32;

using Packed = std::vector<std::uint16_t>;

std::uint16_t pack_frac(std::int64_t numr, std::int64_t denr) {
    if (numr < 0 || denr <= 0) throw std::logic_error("packed coordinate must be nonnegative");
    const std::int64_t g = std::gcd(numr, denr);
    const std::int64_t a = numr / g;
    const std::int64_t b = denr / g;
    if (b > kDenLimit || a * (kDenLimit + 1) + b > 0xFFFF)
        throw std::logic_error("coordinate outside the packed range");
    return (std::uint16_t)(a * (kDenLimit + 1) + b);
}

std::uint16_t pack_rational(const Rational& r) {
    const Integer p = num(r);
    const Integer q = den(r);
    return pack_frac(p.convert_to<std::int64_t>(), q.convert_to<std::int64_t>());
}

Packed pack_point(const std::vector<Rational>& x) {
    Packed out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = pack_rational(x[i]);
    return out;
}

std::vector<Rational> unpack_point(const Packed& p) {
    std::vector<Rational> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = Rational(p[i] / (kDenLimit + 1)) / Rational(p[i] % (kDenLimit + 1));
    return out;
}

/** chi_ij = 2 - theta({i,j}) directly from the integer weight data. */
Packed pack_projection(int n, const SmallVertex& v, const combinat::EdgeIndexer& ei) {
    Packed out(ei.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::uint32_t pair = (1u << (i - 1)) | (1u << (j - 1));
            std::int64_t hit = 0;
            for (int s = 0; s < v.size; ++s)
                if (v.masks[s] & pair) hit += v.numer[s];
            out[ei.pos(i, j)] = pack_frac(2 * v.denom - hit, v.denom);
        }
    return out;
}

/** theta(A) = sum of the weights meeting A, over the subset coordinates. */
Packed pack_theta(const SmallVertex& v, const std::vector<combinat::Subset>& coords) {
    Packed out(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        std::int64_t hit = 0;
        for (int s = 0; s < v.size; ++s)
            if (v.masks[s] & coords[k]) hit += v.numer[s];
        out[k] = pack_frac(hit, v.denom);
    }
    return out;
}

// Precomputed index maps: permuted[j] = x[map[j]] for every group element.
struct PermMaps {
    std::size_t width = 0;
    std::vector<std::vector<std::uint16_t>> maps;
};

PermMaps edge_maps(int n) {
    PermMaps pm;
    combinat::EdgeIndexer ei(n);
    pm.width = ei.size();
    for (const auto& sigma : combinat::symmetric_group(n)) {
        std::vector<std::uint16_t> map(pm.width);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                map[ei.pos(i, j)] = (std::uint16_t)ei.pos(sigma.image(i), sigma.image(j));
        pm.maps.push_back(std::move(map));
    }
    return pm;
}

PermMaps subset_maps(int n) {
    PermMaps pm;
    const auto coords = combinat::subsets_of_size_at_least(n, 2);
    pm.width = coords.size();
    std::vector<std::uint16_t> index((std::size_t)1 << n, 0);
    for (std::size_t k = 0; k < coords.size(); ++k) index[coords[k]] = (std::uint16_t)k;
    for (const auto& sigma : combinat::symmetric_group(n)) {
        std::vector<std::uint16_t> map(pm.width);
        for (std::size_t k = 0; k < coords.size(); ++k) map[k] = index[sigma.apply(coords[k])];
        pm.maps.push_back(std::move(map));
    }
    return pm;
}

/** Smallest packed vector over all relabelings (any fixed total order works). */
Packed canonical_packed(const PermMaps& pm, const Packed& x) {
    Packed best = x;
    const std::size_t w = pm.width;
    for (const auto& map : pm.maps) {
        std::size_t j = 0;
        for (; j < w; ++j)
            if (x[map[j]] != best[j]) break;
        if (j < w && x[map[j]] < best[j])
            for (std::size_t k = 0; k < w; ++k) best[k] = x[map[k]];
    }
    return best;
}

std::set<Packed> packed_orbit(const PermMaps& pm, const Packed& x) {
    std::set<Packed> out;
    Packed buf(pm.width);
    for (const auto& map : pm.maps) {
        for (std::size_t k = 0; k < pm.width; ++k) buf[k] = x[map[k]];
        out.insert(buf);
    }
    return out;
}

std::string value_set_string(const std::vector<Rational>& chi) {
    std::set<Rational> values(chi.begin(), chi.end());
    std::string out = "{";
    for (const Rational& v : values) {
        if (out.size() > 1) out += ",";
        out += rational_str(v);
    }
    out += "}";
    return out;
}

LambdaVertex to_lambda_vertex(const SmallVertex& v) {
    LambdaVertex out;
    out.support.assign(v.masks.begin(), v.masks.begin() + v.size);
    out.weights.reserve((std::size_t)v.size);
    for (int s = 0; s < v.size; ++s)
        out.weights.push_back(Rational(v.numer[s]) / Rational(v.denom));
    return out;
}

/** Membership test of points[skip] against the other points. */
bool extreme_in_set(const std::vector<std::vector<Rational>>& points, std::size_t skip) {
    std::vector<std::vector<Rational>> others;
    others.reserve(points.size() - 1);
    for (std::size_t i = 0; i < points.size(); ++i)
        if (i != skip) others.push_back(points[i]);
    return !in_convex_hull(points[skip], others).inside;
}

}  // namespace

void for_each_theta_vertex(int n, const std::function<void(const LambdaVertex&)>& visit,
                           const Budget& budget, int workers) {
    lambda_scan(
        n, [&](const SmallVertex& v) { visit(to_lambda_vertex(v)); }, budget, workers,
        "theta vertex enumeration");
}

ecf::SetFunction theta_of(int n, const LambdaVertex& v) {
    ecf::SetFunction f(n);
    const combinat::Subset full = combinat::full_mask(n);
    for (combinat::Subset a = 1; a <= full; ++a) {
        Rational total = 0;
        for (std::size_t s = 0; s < v.support.size(); ++s)
            if (v.support[s] & a) total += v.weights[s];
        f.values[a] = total;
    }
    return f;
}

tcf::TcfPoint project_lambda(int n, const LambdaVertex& v) {
    combinat::EdgeIndexer ei(n);
    std::vector<Rational> chi(ei.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const combinat::Subset pair = (1u << (i - 1)) | (1u << (j - 1));
            Rational hit = 0;
            for (std::size_t s = 0; s < v.support.size(); ++s)
                if (v.support[s] & pair) hit += v.weights[s];
            chi[ei.pos(i, j)] = Rational(2) - hit;
        }
    return tcf::TcfPoint(n, std::move(chi));
}

std::vector<LambdaVertex> theta_vertices(int n, const Budget& budget, int workers) {
    std::vector<LambdaVertex> out;
    for_each_theta_vertex(
        n, [&](const LambdaVertex& v) { out.push_back(v); }, budget, workers);
    return out;
}

std::vector<std::vector<Rational>> theta_vertices_dd(int n) {
    const auto h = ecf::theta_h_representation(n);
    hull::HRep rep;
    rep.dim = (int)h.coords.size();
    for (std::size_t r = 0; r < h.rows.size(); ++r) rep.add(h.rows[r], h.rhs[r]);
    auto v = hull::dd_vertices(rep);
    if (!v.rays.empty()) throw std::logic_error("the theta polytope cannot have recession rays");
    std::sort(v.vertices.begin(), v.vertices.end());
    return v.vertices;
}

ThetaSummary theta_summary(int n, const Budget& budget, int workers) {
    ThetaSummary out;
    out.n = n;
    out.facets = (long)ecf::theta_h_representation(n).rows.size();
    const auto coords = combinat::subsets_of_size_at_least(n, 2);
    const PermMaps pm = subset_maps(n);
    std::set<Packed> orbits;
    long count = 0;
    lambda_scan(
        n,
        [&](const SmallVertex& v) {
            ++count;
            orbits.insert(canonical_packed(pm, pack_theta(v, coords)));
        },
        budget, workers, "theta vertex enumeration");
    out.vertices = count;
    out.vertex_orbits = (long)orbits.size();
    return out;
}

long theta_facet_orbits(int n) {
    const auto h = ecf::theta_h_representation(n);
    const auto group = combinat::symmetric_group(n);
    std::set<std::pair<std::vector<Rational>, Rational>> canon;
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
        std::pair<std::vector<Rational>, Rational> best{h.rows[r], h.rhs[r]};
        for (const auto& sigma : group) {
            std::pair<std::vector<Rational>, Rational> cur{
                combinat::act_on_subset_vector(sigma, h.rows[r], n), h.rhs[r]};
            if (cur < best) best = std::move(cur);
        }
        canon.insert(std::move(best));
    }
    return (long)canon.size();
}

VertexSummary tcf_vertices(int n, const Budget& budget, int workers) {
    if (n < 2 || n > kMaxN)
        throw tcf::UnsupportedSize("vertex enumeration supports n between 2 and 6");
    VertexSummary out;
    out.n = n;
    combinat::EdgeIndexer ei(n);
    const PermMaps pm = edge_maps(n);

    // Project every spectral vertex to pair coordinates and deduplicate.
    std::vector<Packed> projected;
    lambda_scan(
        n, [&](const SmallVertex& v) { projected.push_back(pack_projection(n, v, ei)); }, budget,
        workers, "theta vertex enumeration");
    out.theta_vertices = (long)projected.size();
    budget.checkpoint("projection");
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    out.projected_distinct = (long)projected.size();

    // Group the distinct projections into relabeling orbits.
    std::map<Packed, long> classes;
    {
        std::vector<Packed> canon(projected.size());
        parallel_for(projected.size(), workers, [&](std::size_t i) {
            if ((i & 0xFFFu) == 0) budget.checkpoint("orbit classification");
            canon[i] = canonical_packed(pm, projected[i]);
        });
        for (auto& c : canon) ++classes[c];
    }
    out.projected_orbits = (long)classes.size();

    // Extremality filter.
    std::vector<Packed> vertex_classes;
    if (n <= 5) {
        // One membership test per class against every other distinct
        // projection.  All projections lie in the polytope, so "outside"
        // certifies an extreme point; "inside" certifies the opposite, and
        // either verdict extends to the whole orbit.
        std::vector<std::vector<Rational>> all;
        all.reserve(projected.size());
        for (const auto& p : projected) all.push_back(unpack_point(p));
        std::vector<Packed> reps;
        reps.reserve(classes.size());
        for (const auto& [c, mult] : classes) reps.push_back(c);
        std::vector<char> extreme(reps.size(), 0);
        parallel_for(reps.size(), workers, [&](std::size_t k) {
            budget.checkpoint("extremality");
            const std::size_t at =
                (std::size_t)(std::lower_bound(projected.begin(), projected.end(), reps[k]) -
                              projected.begin());
            extreme[k] = extreme_in_set(all, at) ? 1 : 0;
        });
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (extreme[k]) vertex_classes.push_back(reps[k]);
    } else {
        // Two-stage filter.  The clique partition orbits and the lifted
        // non-integer orbits one size down are extreme; stage one tests each
        // remaining class representative against the full known orbits plus
        // the other undecided representatives, which can only rule classes
        // out.  Stage two retests the survivors against the full orbits of
        // every class still in the running, which is conclusive both ways.
        std::set<Packed> knowns;
        for (const auto& part : combinat::set_partitions(n))
            knowns.insert(canonical_packed(pm, pack_point(tcf::clique_partition_point(part, n).chi)));
        const VertexSummary below = tcf_vertices(n - 1, budget, workers);
        for (const auto& row : below.orbits) {
            bool integral = true;
            for (const Rational& v : row.representative.chi)
                if (!is_integer(v)) integral = false;
            if (!integral)
                knowns.insert(
                    canonical_packed(pm, pack_point(tcf::lift_point(row.representative, n).chi)));
        }
        for (const auto& k : knowns)
            if (!classes.count(k))
                throw std::logic_error("a known extreme class is missing from the projection");

        std::vector<Packed> undecided;
        for (const auto& [c, mult] : classes)
            if (!knowns.count(c)) undecided.push_back(c);

        std::vector<std::vector<Rational>> stage_points;
        for (const auto& k : knowns)
            for (const auto& p : packed_orbit(pm, k)) stage_points.push_back(unpack_point(p));
        const std::size_t known_points = stage_points.size();
        for (const auto& u : undecided) stage_points.push_back(unpack_point(u));
        std::vector<char> survived(undecided.size(), 0);
        parallel_for(undecided.size(), workers, [&](std::size_t k) {
            budget.checkpoint("extremality");
            survived[k] = extreme_in_set(stage_points, known_points + k) ? 1 : 0;
        });

        std::vector<Packed> running(knowns.begin(), knowns.end());
        std::vector<std::size_t> candidate_at;
        for (std::size_t k = 0; k < undecided.size(); ++k)
            if (survived[k]) {
                candidate_at.push_back(running.size());
                running.push_back(undecided[k]);
            }
        std::vector<std::pair<std::size_t, std::size_t>> span(running.size());
        std::vector<std::vector<Rational>> big;
        for (std::size_t c = 0; c < running.size(); ++c) {
            const auto orb = packed_orbit(pm, running[c]);
            span[c] = {big.size(), big.size() + orb.size()};
            for (const auto& p : orb) big.push_back(unpack_point(p));
        }
        std::vector<char> final_ok(candidate_at.size(), 0);
        parallel_for(candidate_at.size(), workers, [&](std::size_t t) {
            budget.checkpoint("extremality");
            const std::size_t c = candidate_at[t];
            std::vector<std::vector<Rational>> others;
            others.reserve(big.size() - (span[c].second - span[c].first));
            for (std::size_t i = 0; i < big.size(); ++i)
                if (i < span[c].first || i >= span[c].second) others.push_back(big[i]);
            final_ok[t] =
                in_convex_hull(unpack_point(running[c]), others).inside ? 0 : 1;
        });
        for (const auto& k : knowns) vertex_classes.push_back(k);
        for (std::size_t t = 0; t < candidate_at.size(); ++t)
            if (final_ok[t]) vertex_classes.push_back(running[candidate_at[t]]);
        std::sort(vertex_classes.begin(), vertex_classes.end());
    }

    for (const auto& c : vertex_classes) {
        VertexOrbitRow row;
        const auto chi = unpack_point(c);
        row.representative = tcf::TcfPoint(n, combinat::canonical_representative(chi, n));
        row.orbit_length = classes.at(c);
        if ((long)packed_orbit(pm, c).size() != row.orbit_length)
            throw std::logic_error("projection orbit is only partially present");
        row.value_set = value_set_string(chi);
        out.vertices += row.orbit_length;
        out.orbits.push_back(std::move(row));
    }
    return out;
}

std::vector<tcf::TcfPoint> expand_vertex_orbits(const VertexSummary& summary) {
    std::vector<tcf::TcfPoint> out;
    out.reserve((std::size_t)summary.vertices);
    for (const auto& row : summary.orbits)
        for (auto& chi : combinat::orbit(row.representative.chi, summary.n))
            out.emplace_back(summary.n, std::move(chi));
    if ((long)out.size() != summary.vertices)
        throw std::logic_error("orbit expansion does not add up");
    return out;
}

FacetSummary tcf_facets(int n, const Budget& budget, int workers) {
    if (n < 2 || n > kMaxN)
        throw tcf::UnsupportedSize("facet enumeration supports n between 2 and 6");
    if (n == kMaxN) {
        const auto vertices = expand_vertex_orbits(tcf_vertices(n, budget, workers));
        return tcf_facets_from_generators(catalog::cut7_generators(), vertices, budget, workers);
    }

    const auto summary = tcf_vertices(n, budget, workers);
    const auto vertices = expand_vertex_orbits(summary);
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices.size());
    for (const auto& v : vertices) points.push_back(v.chi);
    budget.checkpoint("hull");
    combinat::EdgeIndexer ei(n);
    const hull::HRep h = hull::hull_facets((int)ei.size(), points);

    FacetSummary out;
    out.n = n;
    out.facets = (long)h.a.size();
    std::map<std::pair<std::vector<Integer>, Integer>, long> classes;
    for (std::size_t r = 0; r < h.a.size(); ++r) {
        budget.checkpoint("facet orbit grouping");
        const auto canon =
            tcf::canonical_inequality(tcf::AffineInequality::from_rational(n, h.a[r], h.b[r]));
        ++classes[{canon.c, canon.c0}];
    }
    for (const auto& [key, count] : classes) {
        tcf::AffineInequality rep(n, key.first, key.second);
        if ((long)tcf::inequality_orbit(rep).size() != count)
            throw std::logic_error("facet orbit is only partially present");
        FacetOrbitRow row;
        row.generator = 0;
        row.orbit_length = count;
        long tight = 0;
        for (const auto& v : vertices)
            if (rep.tight_at(v)) ++tight;
        row.tight_vertices = tight;
        const auto rec = tcf::recognize_hypermetric(rep);
        row.hypermetric = rec.hypermetric;
        if (rec.hypermetric) {
            row.b = rec.b;
            out.hypermetric_facets += count;
            ++out.hypermetric_orbits;
        }
        row.representative = std::move(rep);
        out.orbits.push_back(std::move(row));
    }
    return out;
}

FacetSummary tcf_facets_from_generators(const std::vector<tcf::AffineInequality>& generators,
                                        const std::vector<tcf::TcfPoint>& vertices,
                                        const Budget& budget, int workers) {
    if (generators.empty()) throw tcf::BadInequality("no generators given");
    const int n = generators.front().n - 1;
    combinat::EdgeIndexer ei(n);
    for (const auto& v : vertices)
        if (v.n != n) throw tcf::BadPoint("vertex size does not match the generators");

    using Key = std::vector<long>;  // coefficient row then constant
    const auto key_of = [](const tcf::AffineInequality& q) {
        Key k;
        k.reserve(q.c.size() + 1);
        for (const Integer& e : q.c) k.push_back(e.convert_to<long>());
        k.push_back(q.c0.convert_to<long>());
        return k;
    };
    const auto from_key = [n, &ei](const Key& k) {
        std::vector<Integer> c(ei.size());
        for (std::size_t i = 0; i < ei.size(); ++i) c[i] = k[i];
        return tcf::AffineInequality(n, std::move(c), Integer(k.back()));
    };

    // Pull every expanded generator row back and deduplicate, remembering
    // the smallest generator that produced each distinct row.
    std::map<Key, int> rows;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        budget.checkpoint("generator expansion");
        for (const auto& cut_row : cutcor::expand_generator(generators[g]))
            rows.emplace(key_of(cutcor::pull_back_to_tcf(cut_row)), (int)g + 1);
    }

    // Group into relabeling orbits by marking.
    struct ClassInfo {
        Key rep;
        int generator = 0;
        long size = 0;
    };
    std::vector<ClassInfo> classes;
    std::set<Key> pending;
    for (const auto& [k, g] : rows) pending.insert(k);
    std::vector<combinat::Permutation> gens;
    for (int i = 1; i < n; ++i) gens.push_back(combinat::Permutation::transposition(n, i, i + 1));
    while (!pending.empty()) {
        budget.checkpoint("facet orbit grouping");
        ClassInfo cl;
        cl.rep = *pending.begin();
        cl.generator = rows.at(cl.rep);
        cl.size = 1;
        std::deque<Key> queue{cl.rep};
        pending.erase(pending.begin());
        while (!queue.empty()) {
            const tcf::AffineInequality q = from_key(queue.front());
            queue.pop_front();
            for (const auto& sigma : gens) {
                Key next = key_of(tcf::act(sigma, q));
                const auto it = rows.find(next);
                if (it == rows.end())
                    throw std::logic_error("pulled-back facets are not closed under relabeling");
                if (pending.erase(next)) {
                    ++cl.size;
                    if (next < cl.rep) cl.rep = next;
                    cl.generator = std::min(cl.generator, it->second);
                    queue.push_back(std::move(next));
                }
            }
        }
        classes.push_back(std::move(cl));
    }
    std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
        return std::tie(a.generator, a.rep) < std::tie(b.generator, b.rep);
    });

    // Certify each representative against the vertex list.  Pulling a cut
    // facet back through the slice always yields a valid inequality, but
    // only some of the pullbacks are facets of the slice itself; the rest
    // meet it in a lower-dimensional face and are dropped here.
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices.size());
    for (const auto& v : vertices) points.push_back(v.chi);
    FacetSummary out;
    out.n = n;
    std::vector<std::optional<FacetOrbitRow>> kept(classes.size());
    parallel_for(classes.size(), workers, [&](std::size_t i) {
        budget.checkpoint("facet certification");
        tcf::AffineInequality rep = from_key(classes[i].rep);
        std::vector<Rational> a;
        a.reserve(rep.c.size());
        for (const Integer& e : rep.c) a.push_back(Rational(e));
        const auto check = hull::certify_facet(a, Rational(rep.c0), points, (int)ei.size());
        if (!check.valid)
            throw std::logic_error("a pulled-back inequality fails on a vertex");
        if (!check.is_facet) return;
        FacetOrbitRow row;
        row.generator = classes[i].generator;
        row.orbit_length = classes[i].size;
        row.tight_vertices = (long)check.tight.size();
        const auto rec = tcf::recognize_hypermetric(rep);
        row.hypermetric = rec.hypermetric;
        if (rec.hypermetric) row.b = rec.b;
        row.representative = std::move(rep);
        kept[i] = std::move(row);
    });
    for (auto& row : kept) {
        if (!row) continue;
        out.facets += row->orbit_length;
        if (row->hypermetric) {
            out.hypermetric_facets += row->orbit_length;
            ++out.hypermetric_orbits;
        }
        out.orbits.push_back(std::move(*row));
    }
    return out;
}

}  // namespace tcfkit::pipeline
