#pragma once

#include "skewfib/hrmat.hpp"
#include "skewfib/matrix.hpp"
#include "skewfib/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skewfib::fibration {

// Affine subspace of R^n: a base point plus a direction matrix of full
// column rank (checked on construction, exactly).
class AffineSubspace {
  public:
    AffineSubspace(std::vector<Rational> base, Matrix<Rational> directions);

    std::size_t ambient_dim() const { return base_.size(); }
    std::size_t dim() const { return directions_.cols(); }
    const std::vector<Rational>& base() const { return base_; }
    const Matrix<Rational>& directions() const { return directions_; }

  private:
    std::vector<Rational> base_;
    Matrix<Rational> directions_;
};

// Two affine subspaces are skew when they are disjoint and contain no
// parallel lines; equivalently, stacking [D_A | D_B | base_B − base_A] has
// full column rank p + q + 1. Decided exactly.
bool pairwise_skew(const AffineSubspace& a, const AffineSubspace& b);

// The fibration of R^{N+r−1} carved out of a normalized dual family: the
// fiber through vertical point b is the graph y = B'(b)·x + b over the
// horizontal subspace R^{r−1}. Coordinates are ordered horizontal-first:
// (x_1,…,x_{r−1}, y_1,…,y_N).
struct SkewFibration {
    std::size_t N = 0;
    std::size_t r = 0;
    hrmat::DualFamily dual;  // normalized

    std::size_t ambient_dim() const { return N + r - 1; }
    std::size_t fiber_dim() const { return r - 1; }
};

// Builds the fibration of R^n by p-dimensional pairwise skew affine
// subspaces. Throws domain_error, citing the criterion, when
// p > rho(n−p)−1.
SkewFibration build_fibration(const Integer& p, const Integer& n);

AffineSubspace fiber_at(const SkewFibration& fib, const std::vector<Rational>& b);

// The point of fiber_at(b) with horizontal coordinates x.
std::vector<Rational> fiber_point(const SkewFibration& fib, const std::vector<Rational>& b,
                                  const std::vector<Rational>& x);

// Projects a point of R^n to the parameter b of the unique fiber through
// it, by solving (I + Σ x_j·B'_·j)·b = y exactly. A singular system means
// the fibration data is corrupted and raises internal_error.
std::vector<Rational> base_point(const SkewFibration& fib, const std::vector<Rational>& point);

struct SkewnessReport {
    bool pass = false;
    std::size_t pairs_checked = 0;
    // First counterexample when !pass.
    std::size_t sample_index = 0;
    std::vector<Rational> witness_b1;
    std::vector<Rational> witness_b2;

    std::string describe() const;
};

// Draws sample_count pairs of distinct integer vectors with entries in
// [−9, 9], deterministically from the seed, and certifies skewness of the
// two fibers for each pair. Exact arithmetic makes every sampled check a
// proof for that pair.
SkewnessReport verify_fibration(const SkewFibration& fib, std::size_t sample_count,
                                std::uint64_t seed);

}  // namespace skewfib::fibration
