#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ccgof {

// Nested dyadic partition of (0,1). The level-s point set is
// { j / 2^(s+1) : j = 1 .. 2^(s+1)-1 }, i.e. the sorted union of
// (2k-1)/2^(t+1) over t <= s, so points[s] is a subset of points[s+1] and
// d(s) = 2^(s+1) - 1. Points are exact dyadic rationals (integer numerator
// over a power-of-two denominator) converted to double on demand; both
// representations are exact for every supported level, which keeps nesting
// and symmetry checks free of rounding.
class DyadicGrid {
 public:
  static constexpr int kMaxLevel = 20;

  explicit DyadicGrid(int max_level);

  int max_level() const { return S_; }
  // d(s) = 2^(s+1) - 1
  int dim(int s) const;
  // D = d(S)
  int dim() const { return static_cast<int>(points_.size()); }

  // Full-level (level S) points: point(j), j in [0, D), equals (j+1)/2^(S+1).
  double point(int j) const { return points_[static_cast<std::size_t>(j)]; }
  std::span<const double> points() const { return points_; }

  std::uint64_t numerator(int j) const { return static_cast<std::uint64_t>(j) + 1; }
  std::uint64_t denominator() const { return den_; }

  // The ordered level-s subset.
  std::vector<double> level_points(int s) const;

  // Level-s member j (0-based) sits at full-level index (j+1)*stride - 1.
  int level_stride(int s) const;

  // Smallest level at which full-level index j (0-based) appears.
  int first_level_of(int j) const;

 private:
  int S_;
  std::uint64_t den_;
  std::vector<double> points_;
};

// Normalized projected Haar step with jump at p_star:
//   h(p) = (p_star - I(p <= p_star)) / sqrt(p_star (1 - p_star)),
// i.e. -sqrt((1-p*)/p*) on [0, p*] and +sqrt(p*/(1-p*)) on (p*, 1]. The jump
// point itself uses the closed-interval convention I(p <= p*).
// Throws std::domain_error when p_star is not interior to (0,1).
double haar_projected(double p_star, double p);

}  // namespace ccgof
