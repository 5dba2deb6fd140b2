#include "skewfib/numeric.hpp"

#include "skewfib/error.hpp"

#include <stdexcept>

namespace skewfib {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw structural_error("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw structural_error("malformed integer literal");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw structural_error("malformed integer literal: " + std::string(text));
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw structural_error("zero denominator: " + std::string(text));
    return Rational(num, den);
}

std::string rational_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string rational_string(const Rational& q) {
    if (is_integral(q)) return numerator(q).str();
    return rational_fraction_string(q);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace skewfib
