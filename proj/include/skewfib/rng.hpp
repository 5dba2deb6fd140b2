#pragma once

#include "skewfib/numeric.hpp"

#include <cstdint>
#include <vector>

namespace skewfib {

// SplitMix64. Chosen over <random> engines because the byte stream must be
// identical across platforms and standard library implementations; every
// sampled verification in this library is replayable from its seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, the
    // draws only need to be deterministic and well spread.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Integer-entry vector with entries in [lo, hi], as exact rationals.
    std::vector<Rational> rational_vector(std::size_t dim, std::int64_t lo, std::int64_t hi) {
        std::vector<Rational> v(dim);
        for (auto& x : v) x = Rational(int_in(lo, hi));
        return v;
    }

    std::vector<Integer> integer_vector(std::size_t dim, std::int64_t lo, std::int64_t hi) {
        std::vector<Integer> v(dim);
        for (auto& x : v) x = Integer(int_in(lo, hi));
        return v;
    }

  private:
    std::uint64_t state_;
};

}  // namespace skewfib
