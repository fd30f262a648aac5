#ifndef FACEKIT_RATIONAL_HPP
#define FACEKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace facekit {

// mpq_class keeps every value in lowest terms with a positive denominator,
// so structural equality of Rat is value equality.
using Rat = mpq_class;
using Int = mpz_class;

// Exact coordinate vector; the dimension is the size.
using RatVec = std::vector<Rat>;

/// Parses "p", "-p", "p/q" (q > 0 after sign handling). Throws ParseError
/// (line 0) on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);

inline RatVec zeros(std::size_t dim) { return RatVec(dim, Rat(0)); }

RatVec unit_vector(std::size_t dim, std::size_t axis);

Rat dot(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& s, const RatVec& a);

bool is_zero(const RatVec& v);

// Lexicographic order on coordinates; used to canonicalize vertex lists.
std::strong_ordering lex_compare(const RatVec& a, const RatVec& b);

struct LexLess {
  bool operator()(const RatVec& a, const RatVec& b) const
  {
    return lex_compare(a, b) < 0;
  }
};

Rat abs(const Rat& q);
Rat pow(const Rat& base, unsigned long exponent);

/// Scales v by a positive rational so that it becomes a primitive integer
/// vector. Zero vectors are returned unchanged.
RatVec primitive(const RatVec& v);

// l-infinity norm, exact.
Rat max_norm(const RatVec& v);

}  // namespace facekit

#endif
