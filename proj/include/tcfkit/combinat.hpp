#ifndef TCFKIT_COMBINAT_HPP
#define TCFKIT_COMBINAT_HPP

/**
 * Indexing and symmetry plumbing: edge coordinates of the complete graph
 * K_n, subsets of {1..n} as bitmasks, permutation actions on both, orbit
 * enumeration under S_n, and set partitions.
 *
 * Conventions used across the library:
 *  - vertices are 1-based in all I/O and in the API;
 *  - edge vectors are ordered (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n);
 *  - a subset A of {1..n} is the bitmask with bit i-1 set for i in A;
 *  - subset-indexed coordinate vectors list masks in increasing order.
 */

#include "tcfkit/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tcfkit::combinat {

class BadIndex : public std::runtime_error {
  public:
    explicit BadIndex(const std::string& what) : std::runtime_error(what) {}
};

using Subset = std::uint32_t;

/** Number of edges of K_n. */
inline std::size_t edge_count(int n) { return (std::size_t)n * (n - 1) / 2; }

/** Maps unordered vertex pairs of K_n to positions in an edge vector. */
class EdgeIndexer {
  public:
    explicit EdgeIndexer(int n) : n_(n) {
        if (n < 1) throw BadIndex("EdgeIndexer needs n >= 1");
    }

    int n() const { return n_; }
    std::size_t size() const { return edge_count(n_); }

    /** Position of edge {i,j}; the order of i and j does not matter. */
    std::size_t pos(int i, int j) const {
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_)
            throw BadIndex("edge {" + std::to_string(i) + "," + std::to_string(j) +
                           "} is not an edge of K_" + std::to_string(n_));
        if (i > j) std::swap(i, j);
        return (std::size_t)(i - 1) * n_ - (std::size_t)i * (i - 1) / 2 + (std::size_t)(j - i) - 1;
    }

    /** Inverse of pos(). */
    std::pair<int, int> pair(std::size_t position) const {
        if (position >= size()) throw BadIndex("edge position out of range");
        int i = 1;
        std::size_t skip = 0;
        while (skip + (std::size_t)(n_ - i) <= position) {
            skip += (std::size_t)(n_ - i);
            ++i;
        }
        int j = i + 1 + (int)(position - skip);
        return {i, j};
    }

  private:
    int n_;
};

/** A permutation of {1..n}; image(i) is 1-based. */
class Permutation {
  public:
    explicit Permutation(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i + 1;
    }
    explicit Permutation(std::vector<int> images);

    int n() const { return (int)img_.size(); }
    int image(int i) const { return img_[(std::size_t)(i - 1)]; }

    static Permutation transposition(int n, int a, int b);

    /** this followed by other: (this.then(other))(i) = other(this(i)). */
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;

    /** Image of a subset bitmask. */
    Subset apply(Subset a) const;

    bool operator==(const Permutation& other) const { return img_ == other.img_; }

  private:
    std::vector<int> img_;
};

/** All n! permutations of {1..n}. */
std::vector<Permutation> symmetric_group(int n);

/**
 * Relabeled edge vector: result_{ij} = x_{sigma(i) sigma(j)}.
 * With composition s.then(t) this satisfies act(s.then(t), x) =
 * act(s, act(t, x)), which is what the orbit walk relies on.
 */
std::vector<Rational> act(const Permutation& sigma, const std::vector<Rational>& x, int n);

/**
 * Same relabeling for a vector indexed by the subsets of {1..n} with at
 * least two elements (masks in increasing order).
 */
std::vector<Rational> act_on_subset_vector(const Permutation& sigma,
                                           const std::vector<Rational>& x, int n);

/**
 * Orbit of an edge vector under S_n: breadth-first walk over the adjacent
 * transpositions (i,i+1), deduplicated by exact coordinates.  Output is
 * sorted lexicographically, so the first element is the canonical form.
 */
std::vector<std::vector<Rational>> orbit(const std::vector<Rational>& x, int n);

/** Lexicographically smallest relabeling of an edge vector. */
std::vector<Rational> canonical_representative(const std::vector<Rational>& x, int n);

/** Orbit and canonical form for subset-indexed vectors (used for ECF data). */
std::vector<std::vector<Rational>> orbit_subset_vector(const std::vector<Rational>& x, int n);

/** A partition of {1..n} into nonempty blocks. */
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    /** Blocks sorted internally and by smallest element; validates coverage. */
    static SetPartition normalized(std::vector<std::vector<int>> blocks, int n);

    std::size_t block_count() const { return blocks.size(); }
    bool operator==(const SetPartition& other) const { return blocks == other.blocks; }
};

/** All set partitions of {1..n}; there are Bell(n) of them. */
std::vector<SetPartition> set_partitions(int n);

/** Subset helpers. */
inline int popcount(Subset a) { return __builtin_popcount(a); }

/** Full ground set {1..n} as a mask. */
inline Subset full_mask(int n) { return (Subset(1) << n) - 1; }

/** "{1,3}" style rendering, ascending elements; "{}" for the empty set. */
std::string subset_str(Subset a);

/** Parse the subset_str format; validates membership in {1..n}. */
Subset parse_subset(const std::string& text, int n);

/** Masks of all subsets of {1..n} with at least `min_size` elements. */
std::vector<Subset> subsets_of_size_at_least(int n, int min_size);

}  // namespace tcfkit::combinat

#endif  // TCFKIT_COMBINAT_HPP
