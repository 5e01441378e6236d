#include "tcfkit/combinat.hpp"

#include <algorithm>
#include <unordered_map>

namespace tcfkit::combinat {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > (int)img_.size() || seen[(std::size_t)(v - 1)])
            throw BadIndex("not a permutation of {1..n}");
        seen[(std::size_t)(v - 1)] = true;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 1 || b < 1 || a > n || b > n) throw BadIndex("transposition out of range");
    std::swap(p.img_[(std::size_t)(a - 1)], p.img_[(std::size_t)(b - 1)]);
    return p;
}

Permutation Permutation::then(const Permutation& other) const {
    if (n() != other.n()) throw BadIndex("composing permutations of different degree");
    Permutation r(n());
    for (int i = 1; i <= n(); ++i) r.img_[(std::size_t)(i - 1)] = other.image(image(i));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(n());
    for (int i = 1; i <= n(); ++i) r.img_[(std::size_t)(image(i) - 1)] = i;
    return r;
}

Subset Permutation::apply(Subset a) const {
    Subset out = 0;
    for (int i = 1; i <= n(); ++i)
        if (a & (Subset(1) << (i - 1))) out |= Subset(1) << (image(i) - 1);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> all;
    do {
        all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return all;
}

std::vector<Rational> act(const Permutation& sigma, const std::vector<Rational>& x, int n) {
    EdgeIndexer idx(n);
    if (x.size() != idx.size()) throw BadIndex("act: edge vector length mismatch");
    std::vector<Rational> out(x.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out[idx.pos(i, j)] = x[idx.pos(sigma.image(i), sigma.image(j))];
    return out;
}

std::vector<Rational> act_on_subset_vector(const Permutation& sigma,
                                           const std::vector<Rational>& x, int n) {
    std::vector<Subset> masks = subsets_of_size_at_least(n, 2);
    if (x.size() != masks.size()) throw BadIndex("act_on_subset_vector: length mismatch");
    std::unordered_map<Subset, std::size_t> where;
    for (std::size_t k = 0; k < masks.size(); ++k) where[masks[k]] = k;
    std::vector<Rational> out(x.size());
    for (std::size_t k = 0; k < masks.size(); ++k) out[k] = x[where[sigma.apply(masks[k])]];
    return out;
}

namespace {

template <typename Act>
std::vector<std::vector<Rational>> orbit_walk(const std::vector<Rational>& x, int n, Act&& apply) {
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));

    struct VecHash {
        std::size_t operator()(const std::vector<Rational>& v) const {
            return hash_rational_vector(v);
        }
    };
    std::unordered_map<std::vector<Rational>, bool, VecHash> seen;
    std::vector<std::vector<Rational>> queue{x};
    seen.emplace(x, true);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<Rational> cur = queue[head];  // copy: queue may reallocate
        for (const auto& g : gens) {
            std::vector<Rational> img = apply(g, cur);
            if (seen.emplace(img, true).second) queue.push_back(std::move(img));
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

}  // namespace

std::vector<std::vector<Rational>> orbit(const std::vector<Rational>& x, int n) {
    return orbit_walk(x, n,
                      [n](const Permutation& g, const std::vector<Rational>& v) { return act(g, v, n); });
}

std::vector<Rational> canonical_representative(const std::vector<Rational>& x, int n) {
    return orbit(x, n).front();
}

std::vector<std::vector<Rational>> orbit_subset_vector(const std::vector<Rational>& x, int n) {
    return orbit_walk(x, n, [n](const Permutation& g, const std::vector<Rational>& v) {
        return act_on_subset_vector(g, v, n);
    });
}

SetPartition SetPartition::normalized(std::vector<std::vector<int>> blocks, int n) {
    std::vector<bool> seen((std::size_t)n, false);
    for (auto& b : blocks) {
        if (b.empty()) throw BadIndex("set partition with an empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n || seen[(std::size_t)(v - 1)])
                throw BadIndex("set partition does not partition {1..n}");
            seen[(std::size_t)(v - 1)] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw BadIndex("set partition does not cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

std::vector<SetPartition> set_partitions(int n) {
    // restricted growth strings: a[i] <= 1 + max(a[0..i-1])
    std::vector<SetPartition> out;
    std::vector<int> a((std::size_t)n, 0);
    auto emit = [&]() {
        int nb = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks((std::size_t)nb);
        for (int i = 0; i < n; ++i) blocks[(std::size_t)a[(std::size_t)i]].push_back(i + 1);
        out.push_back(SetPartition::normalized(std::move(blocks), n));
    };
    // iterate restricted growth strings in lexicographic order
    while (true) {
        emit();
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int k = 0; k < i; ++k) mx = std::max(mx, a[(std::size_t)k]);
            if (a[(std::size_t)i] <= mx) break;
        }
        if (i == 0) break;
        ++a[(std::size_t)i];
        for (int k = i + 1; k < n; ++k) a[(std::size_t)k] = 0;
    }
    return out;
}

std::string subset_str(Subset a) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (a & (Subset(1) << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

Subset parse_subset(const std::string& text, int n) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw BadIndex("subset must look like {1,3}: got \"" + text + "\"");
    Subset out = 0;
    std::string inner = text.substr(1, text.size() - 2);
    if (inner.empty()) return 0;
    std::size_t start = 0;
    while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw BadIndex("bad element \"" + tok + "\" in subset \"" + text + "\"");
        }
        if (v < 1 || v > n)
            throw BadIndex("element " + std::to_string(v) + " outside {1.." + std::to_string(n) +
                           "}");
        if (out & (Subset(1) << (v - 1))) throw BadIndex("repeated element in \"" + text + "\"");
        out |= Subset(1) << (v - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Subset> subsets_of_size_at_least(int n, int min_size) {
    std::vector<Subset> masks;
    for (Subset a = 0; a <= full_mask(n); ++a)
        if (popcount(a) >= min_size) masks.push_back(a);
    return masks;
}

}  // namespace tcfkit::combinat
