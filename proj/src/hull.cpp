#include "tcfkit/hull.hpp"

#include "tcfkit/linprog.hpp"
#include "tcfkit/qmatrix.hpp"

#include <algorithm>
#include <utility>

namespace tcfkit::hull {

namespace {

/** Positive rescaling to primitive integer entries (direction preserved). */
std::vector<Rational> primitive(const std::vector<Rational>& v) {
    Integer scale = 1;
    for (const Rational& r : v) scale = lcm(scale, den(r));
    std::vector<Integer> w(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i] * Rational(scale));
        g = gcd(g, w[i]);
    }
    std::vector<Rational> out(v.size(), Rational(0));
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(w[i] / g);
    return out;
}

struct Ray {
    std::vector<Rational> y;
    std::vector<std::uint64_t> zero;  // tight rows, bitset over all rows
};

std::vector<std::uint64_t> tight_bits(const std::vector<Rational>& y,
                                      const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::uint64_t> z((rows.size() + 63) / 64, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Rational s = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (rows[r][i] != 0 && y[i] != 0) s += rows[r][i] * y[i];
        if (s == 0) z[r / 64] |= std::uint64_t(1) << (r % 64);
    }
    return z;
}

int popcount_masked(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                    const std::vector<std::uint64_t>& mask) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w)
        c += __builtin_popcountll(a[w] & b[w] & mask[w]);
    return c;
}

bool contains_under_mask(const std::vector<std::uint64_t>& common,
                         const std::vector<std::uint64_t>& other,
                         const std::vector<std::uint64_t>& mask) {
    for (std::size_t w = 0; w < common.size(); ++w)
        if (common[w] & mask[w] & ~other[w]) return false;
    return true;
}

}  // namespace

std::vector<std::vector<Rational>> extreme_rays(int dim,
                                                const std::vector<std::vector<Rational>>& rows) {
    const std::size_t d = (std::size_t)dim;
    for (const auto& r : rows)
        if (r.size() != d) throw DimensionMismatch("extreme_rays: row length mismatch");

    // greedy independent subsystem for the simplicial start
    std::vector<std::size_t> start;
    {
        std::vector<std::vector<Rational>> red;
        std::vector<std::size_t> lead;
        for (std::size_t r = 0; r < rows.size() && start.size() < d; ++r) {
            std::vector<Rational> v = rows[r];
            for (std::size_t k = 0; k < red.size(); ++k)
                if (v[lead[k]] != 0) {
                    Rational f = v[lead[k]];
                    for (std::size_t i = 0; i < d; ++i) v[i] -= f * red[k][i];
                }
            std::size_t piv = d;
            for (std::size_t i = 0; i < d; ++i)
                if (v[i] != 0) {
                    piv = i;
                    break;
                }
            if (piv == d) continue;
            Rational f = v[piv];
            for (std::size_t i = 0; i < d; ++i) v[i] /= f;
            red.push_back(std::move(v));
            lead.push_back(piv);
            start.push_back(r);
        }
    }
    if (start.size() < d) throw NotPointed("extreme_rays: rows do not have full column rank");

    QMatrix basis((int)d, (int)d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) basis.at((int)k, (int)i) = rows[start[k]][i];

    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::uint64_t> processed(words, 0);
    for (std::size_t r : start) processed[r / 64] |= std::uint64_t(1) << (r % 64);

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rational> unit(d, Rational(0));
        unit[k] = 1;
        auto sol = solve(basis, unit);
        if (!sol) throw std::logic_error("extreme_rays: initial basis went singular");
        Ray ray;
        ray.y = primitive(*sol);
        ray.zero = tight_bits(ray.y, rows);
        rays.push_back(std::move(ray));
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((processed[r / 64] >> (r % 64)) & 1) continue;
        std::vector<Rational> slack(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t t = 0; t < rays.size(); ++t) {
            Rational s = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (rows[r][i] != 0 && rays[t].y[i] != 0) s += rows[r][i] * rays[t].y[i];
            slack[t] = std::move(s);
            if (slack[t] > 0)
                pos.push_back(t);
            else if (slack[t] < 0)
                neg.push_back(t);
        }
        processed[r / 64] |= std::uint64_t(1) << (r % 64);
        if (neg.empty()) continue;

        std::vector<Ray> next;
        for (std::size_t t = 0; t < rays.size(); ++t)
            if (slack[t] >= 0) next.push_back(rays[t]);
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                if (popcount_masked(rays[p].zero, rays[q].zero, processed) < (int)d - 2) continue;
                std::vector<std::uint64_t> common(words);
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = rays[p].zero[w] & rays[q].zero[w];
                bool blocked = false;
                for (std::size_t t = 0; t < rays.size() && !blocked; ++t) {
                    if (t == p || t == q) continue;
                    if (contains_under_mask(common, rays[t].zero, processed)) blocked = true;
                }
                if (blocked) continue;
                std::vector<Rational> y(d);
                for (std::size_t i = 0; i < d; ++i)
                    y[i] = slack[p] * rays[q].y[i] - slack[q] * rays[p].y[i];
                Ray ray;
                ray.y = primitive(y);
                ray.zero = tight_bits(ray.y, rows);
                next.push_back(std::move(ray));
            }
        rays = std::move(next);
    }

    std::vector<std::vector<Rational>> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VRep dd_vertices(const HRep& h) {
    const std::size_t d = (std::size_t)h.dim;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(h.a.size() + 1);
    for (std::size_t r = 0; r < h.a.size(); ++r) {
        std::vector<Rational> row(d + 1);
        row[0] = h.b[r];
        for (std::size_t i = 0; i < d; ++i) row[i + 1] = -h.a[r][i];
        rows.push_back(std::move(row));
    }
    {
        std::vector<Rational> row(d + 1, Rational(0));
        row[0] = 1;
        rows.push_back(std::move(row));
    }
    VRep out;
    out.dim = h.dim;
    for (auto& y : extreme_rays(h.dim + 1, rows)) {
        if (y[0] > 0) {
            std::vector<Rational> x(d);
            for (std::size_t i = 0; i < d; ++i) x[i] = y[i + 1] / y[0];
            out.vertices.push_back(std::move(x));
        } else {
            out.rays.push_back(primitive(std::vector<Rational>(y.begin() + 1, y.end())));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

HRep hull_facets(int dim, const std::vector<std::vector<Rational>>& points) {
    const std::size_t d = (std::size_t)dim;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != d) throw DimensionMismatch("hull_facets: point length mismatch");
        std::vector<Rational> row(d + 1);
        row[0] = 1;
        for (std::size_t i = 0; i < d; ++i) row[i + 1] = p[i];
        rows.push_back(std::move(row));
    }
    HRep out;
    out.dim = dim;
    for (const auto& y : extreme_rays(dim + 1, rows)) {
        std::vector<Rational> a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = -y[i + 1];
        out.add(std::move(a), y[0]);
    }
    return out;
}

std::vector<std::size_t> filter_extreme(const std::vector<std::vector<Rational>>& points) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<Rational>> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others).inside) out.push_back(i);
    }
    return out;
}

std::size_t homogeneous_rank(const std::vector<std::vector<Rational>>& points, int dim) {
    QMatrix m((int)points.size(), dim + 1);
    for (std::size_t r = 0; r < points.size(); ++r) {
        m.at((int)r, 0) = 1;
        for (int i = 0; i < dim; ++i) m.at((int)r, i + 1) = points[r][(std::size_t)i];
    }
    return rank(m);
}

FacetCheck certify_facet(const std::vector<Rational>& a, const Rational& b,
                         const std::vector<std::vector<Rational>>& points, int dim) {
    FacetCheck out;
    std::vector<std::vector<Rational>> tight_points;
    for (std::size_t t = 0; t < points.size(); ++t) {
        Rational v = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && points[t][i] != 0) v += a[i] * points[t][i];
        if (v > b) {
            out.valid = false;
            out.violated_index = t;
            return out;
        }
        if (v == b) {
            out.tight.push_back(t);
            tight_points.push_back(points[t]);
        }
    }
    out.tight_rank = homogeneous_rank(tight_points, dim);
    out.is_facet = out.valid && out.tight_rank == (std::size_t)dim;
    return out;
}

}  // namespace tcfkit::hull
