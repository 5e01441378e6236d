#ifndef TCFKIT_RATIONAL_HPP
#define TCFKIT_RATIONAL_HPP

/**
 * Exact rational scalar type and small helpers shared by every module.
 *
 * All geometry in this library is done over Q.  We use the GMP-backed
 * boost::multiprecision rational; it is canonical after arithmetic, but
 * values parsed from strings have to be canonicalized by hand (GMP's
 * mpq_set_str does not reduce, and happily accepts a zero denominator).
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcfkit {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/** Thrown when a textual rational (or a file of them) cannot be parsed. */
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Parse "p/q" or "p" into a canonical rational.
 *
 * @param text decimal integer, optionally followed by '/' and a nonzero
 *             decimal integer.
 * @throws ParseError if the text is malformed or the denominator is zero.
 */
inline Rational parse_rational(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::exception&) {
        throw ParseError("not a rational: \"" + text + "\"");
    }
    if (mpz_sgn(mpq_denref(r.backend().data())) == 0)
        throw ParseError("zero denominator in \"" + text + "\"");
    mpq_canonicalize(r.backend().data());
    return r;
}

/** Render a rational as "p/q", or just "p" when the denominator is 1. */
inline std::string rational_str(const Rational& r) { return r.str(); }

/** Numerator as a multiprecision integer. */
inline Integer num(const Rational& r) { return numerator(r); }

/** Denominator (always positive) as a multiprecision integer. */
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/**
 * Hash a rational vector; used to deduplicate large point sets.  Collisions
 * are resolved by exact comparison on the caller's side, so mixing the low
 * limbs of numerator and denominator is good enough.
 */
inline std::size_t hash_rational_vector(const std::vector<Rational>& v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t)v.size();
    for (const Rational& r : v) {
        std::uint64_t a = (std::uint64_t)mpz_get_ui(mpq_numref(r.backend().data()));
        if (mpz_sgn(mpq_numref(r.backend().data())) < 0) a = ~a;
        std::uint64_t b = (std::uint64_t)mpz_get_ui(mpq_denref(r.backend().data()));
        h ^= a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return (std::size_t)h;
}

}  // namespace tcfkit

#endif  // TCFKIT_RATIONAL_HPP
