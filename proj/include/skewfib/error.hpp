#pragma once

#include <stdexcept>
#include <string>

namespace skewfib {

// Invalid mathematical input: N = 0 where positivity is required, a
// non-admissible dimension pair, an equatorial fiber, and so on.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data handed to an operation: mismatched matrix dimensions,
// vectors of the wrong length.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// A condition that cannot occur for objects produced by this library;
// reaching it means an object was corrupted or constructed by hand.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace skewfib
