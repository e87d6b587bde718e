#pragma once

#include <memory>
#include <vector>

namespace ccgof {

enum class RefKind { StdNormal, Uniform01, UserTabulated };

namespace detail {
class TabulatedCdf;
}

// A fully specified continuous reference distribution: the simple-null F0.
// StdNormal and Uniform01 are closed-form; UserTabulated interpolates
// user-supplied (x, p) pairs with a monotone piecewise cubic, so any
// continuous reference can be plugged into the simple-null pipeline.
class ReferenceCdf {
 public:
  static ReferenceCdf std_normal();
  static ReferenceCdf uniform01();
  // Nodes must be strictly increasing in x, nondecreasing in p, with
  // p.front() == 0 and p.back() == 1 (the table must span the distribution).
  static ReferenceCdf tabulated(std::vector<double> x, std::vector<double> p);

  RefKind kind() const { return kind_; }

  double cdf(double x) const;
  double pdf(double x) const;
  // Throws std::domain_error for p in {0,1} (open-interval contract).
  double quantile(double p) const;

 private:
  explicit ReferenceCdf(RefKind kind) : kind_(kind) {}
  RefKind kind_;
  std::shared_ptr<const detail::TabulatedCdf> tab_;
};

}  // namespace ccgof
