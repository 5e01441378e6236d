#include "tcfkit/setfunction.hpp"

#include <algorithm>
#include <map>

namespace tcfkit::ecf {

using combinat::full_mask;
using combinat::popcount;
using combinat::subset_str;

Rational alternation_value(const SetFunction& f, Subset K, Subset L) {
    if (K & L)
        throw OverlappingSets("alternation_value: K = " + subset_str(K) + " and L = " +
                              subset_str(L) + " overlap");
    Rational total = 0;
    // walk all I subset L via the standard submask loop
    Subset I = L;
    for (;;) {
        if (popcount(I) % 2 == 1)
            total += f.at(K | I);
        else
            total -= f.at(K | I);
        if (I == 0) break;
        I = (I - 1) & L;
    }
    return total;
}

AlternationCheck is_completely_alternating(const SetFunction& f) {
    const Subset full = full_mask(f.n);
    for (Subset L = 1; L <= full; ++L) {
        Rational v = alternation_value(f, full & ~L, L);
        if (v < 0) return AlternationCheck{false, L, v};
    }
    return AlternationCheck{};
}

ThetaHRep theta_h_representation(int n) {
    ThetaHRep h;
    h.n = n;
    h.coords = combinat::subsets_of_size_at_least(n, 2);
    std::map<Subset, std::size_t> col;
    for (std::size_t k = 0; k < h.coords.size(); ++k) col[h.coords[k]] = k;

    const Subset full = full_mask(n);
    std::map<std::pair<std::vector<Rational>, Rational>, bool> seen;
    for (Subset L = 1; L <= full; ++L) {
        // alternation >= 0 in <= orientation: sum_{I subset L} (-1)^{|I|} theta(L^c + I) <= 0,
        // with theta(empty) = 0 and theta({i}) = 1 moved to the right-hand side.
        std::vector<Rational> row(h.coords.size(), Rational(0));
        Rational rhs = 0;
        Subset K = full & ~L;
        Subset I = L;
        for (;;) {
            Subset A = K | I;
            int sign = popcount(I) % 2 == 0 ? 1 : -1;
            if (popcount(A) >= 2)
                row[col[A]] += sign;
            else if (popcount(A) == 1)
                rhs -= sign;  // theta({i}) = 1
            if (I == 0) break;
            I = (I - 1) & L;
        }
        if (seen.emplace(std::make_pair(row, rhs), true).second) {
            h.rows.push_back(std::move(row));
            h.rhs.push_back(rhs);
            h.row_label.push_back(L);
        }
    }
    return h;
}

TmSpectralWeights tm_weights(const SetFunction& theta) {
    if (!theta.ecf_normalized())
        throw NotInTheta("tm_weights: input is not ECF-normalized");
    AlternationCheck chk = is_completely_alternating(theta);
    if (!chk.ok)
        throw NotInTheta("tm_weights: not completely alternating (L = " +
                         subset_str(chk.violating_L) + ")");
    TmSpectralWeights w;
    w.n = theta.n;
    w.lambda.assign((std::size_t)1 << theta.n, Rational(0));
    const Subset full = full_mask(theta.n);
    for (Subset K = 1; K <= full; ++K)
        w.lambda[K] = alternation_value(theta, full & ~K, K);
    return w;
}

SetFunction theta_from_weights(const TmSpectralWeights& w) {
    SetFunction theta(w.n);
    const Subset full = full_mask(w.n);
    for (Subset A = 1; A <= full; ++A) {
        Rational v = 0;
        for (Subset K = 1; K <= full; ++K)
            if (K & A) v += w.lambda[K];
        theta.at(A) = v;
    }
    return theta;
}

Rational tm_neg_log_cdf(const TmSpectralWeights& w, const std::vector<Rational>& x) {
    if ((int)x.size() != w.n)
        throw NonPositiveCoordinate("tm_neg_log_cdf: expected " + std::to_string(w.n) +
                                    " coordinates");
    for (const Rational& xi : x)
        if (xi <= 0) throw NonPositiveCoordinate("tm_neg_log_cdf: coordinates must be positive");
    Rational total = 0;
    const Subset full = full_mask(w.n);
    for (Subset K = 1; K <= full; ++K) {
        if (w.lambda[K] == 0) continue;
        Rational mx = 0;
        for (int i = 0; i < w.n; ++i)
            if (K & (Subset(1) << i)) mx = std::max(mx, Rational(1 / x[(std::size_t)i]));
        total += w.lambda[K] * mx;
    }
    return total;
}

Rational BinaryModel::event_probability(int i) const {
    Rational p = 0;
    for (Subset S = 0; S < (Subset)mass.size(); ++S)
        if (S & (Subset(1) << (i - 1))) p += mass[S];
    return p;
}

Rational BinaryModel::capacity_value(Subset a) const {
    Rational p = 0;
    for (Subset S = 0; S < (Subset)mass.size(); ++S)
        if (S & a) p += mass[S];
    return p;
}

Rational BinaryModel::joint_probability(int i, int j) const {
    Subset both = (Subset(1) << (i - 1)) | (Subset(1) << (j - 1));
    Rational p = 0;
    for (Subset S = 0; S < (Subset)mass.size(); ++S)
        if ((S & both) == both) p += mass[S];
    return p;
}

BinaryModel capacity_to_distribution(const SetFunction& c) {
    if (c.at(0) != 0) throw NotACapacity("capacity_to_distribution: C(empty) must be 0");
    BinaryModel model;
    model.n = c.n;
    model.mass.assign((std::size_t)1 << c.n, Rational(0));
    const Subset full = full_mask(c.n);
    for (Subset S = 0; S <= full; ++S) {
        Rational m = 0;
        Subset R = S;
        for (;;) {
            int sign = popcount(S & ~R) % 2 == 0 ? 1 : -1;
            m += Rational(sign) * (1 - c.at(full & ~R));
            if (R == 0) break;
            R = (R - 1) & S;
        }
        if (m < 0)
            throw NotACapacity("capacity_to_distribution: negative mass at S = " +
                               subset_str(S) + " (" + rational_str(m) + ")");
        model.mass[S] = m;
    }
    return model;
}

}  // namespace tcfkit::ecf
