#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace skewfib {

// Arbitrary-precision integers and rationals. All arithmetic in this
// library is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Parses a decimal integer, optionally signed. Throws std::runtime_error on
// malformed input.
Integer parse_integer(std::string_view text);

// Parses "a" or "a/b" into an exact rational. Throws on malformed input or
// zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form (always includes the denominator).
std::string rational_fraction_string(const Rational& q);

// "num" when integral, "num/den" otherwise.
std::string rational_string(const Rational& q);

// FNV-1a over bytes; used for golden-data fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace skewfib
