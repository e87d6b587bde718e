#include "ccgof/reference_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccgof/normal.hpp"

namespace ccgof {

namespace detail {

// Monotone piecewise-cubic CDF through (x_i, p_i) nodes, Fritsch-Carlson
// slope limiting. Monotonicity of the interpolant is what makes the
// quantile well defined.
class TabulatedCdf {
 public:
  TabulatedCdf(std::vector<double> x, std::vector<double> p)
      : x_(std::move(x)), p_(std::move(p)) {
    const std::size_t m = x_.size();
    if (m < 2 || p_.size() != m) {
      throw std::invalid_argument("tabulated CDF needs >= 2 (x,p) nodes");
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (!(x_[i] < x_[i + 1])) {
        throw std::invalid_argument("tabulated CDF: x must be strictly increasing");
      }
      if (p_[i + 1] < p_[i]) {
        throw std::invalid_argument("tabulated CDF: p must be nondecreasing");
      }
    }
    if (p_.front() != 0.0 || p_.back() != 1.0) {
      throw std::invalid_argument("tabulated CDF: p must span [0,1]");
    }
    build_slopes();
  }

  double cdf(double x) const {
    if (x <= x_.front()) return 0.0;
    if (x >= x_.back()) return 1.0;
    const std::size_t i = interval_of(x);
    double t, h;
    hermite_coords(i, x, t, h);
    return hermite(p_[i], p_[i + 1], d_[i], d_[i + 1], t, h);
  }

  double pdf(double x) const {
    if (x <= x_.front() || x >= x_.back()) return 0.0;
    const std::size_t i = interval_of(x);
    double t, h;
    hermite_coords(i, x, t, h);
    return hermite_deriv(p_[i], p_[i + 1], d_[i], d_[i + 1], t, h);
  }

  double quantile(double p) const {
    // Locate the bracketing interval by node probabilities, then solve the
    // cubic by safeguarded Newton.
    auto it = std::upper_bound(p_.begin(), p_.end(), p);
    std::size_t i = static_cast<std::size_t>(it - p_.begin());
    i = (i == 0) ? 0 : i - 1;
    i = std::min(i, x_.size() - 2);
    double lo = x_[i], hi = x_[i + 1];
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
      const double f = cdf_on(i, x) - p;
      if (f > 0.0) {
        hi = x;
      } else {
        lo = x;
      }
      const double df = pdf_on(i, x);
      double next = (df > 0.0) ? x - f / df : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - x) < 1e-15 * (1.0 + std::abs(x))) return next;
      x = next;
    }
    return x;
  }

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  void build_slopes() {
    const std::size_t m = x_.size();
    std::vector<double> delta(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      delta[i] = (p_[i + 1] - p_[i]) / (x_[i + 1] - x_[i]);
    }
    d_.assign(m, 0.0);
    d_[0] = delta[0];
    d_[m - 1] = delta[m - 2];
    for (std::size_t i = 1; i + 1 < m; ++i) {
      d_[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0
                                               : 0.5 * (delta[i - 1] + delta[i]);
    }
    // Fritsch-Carlson limiter keeps each cubic piece monotone.
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (delta[i] == 0.0) {
        d_[i] = d_[i + 1] = 0.0;
        continue;
      }
      const double a = d_[i] / delta[i];
      const double b = d_[i + 1] / delta[i];
      const double s = a * a + b * b;
      if (s > 9.0) {
        const double tau = 3.0 / std::sqrt(s);
        d_[i] = tau * a * delta[i];
        d_[i + 1] = tau * b * delta[i];
      }
    }
  }

  std::size_t interval_of(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    i = (i == 0) ? 0 : i - 1;
    return std::min(i, x_.size() - 2);
  }

  void hermite_coords(std::size_t i, double x, double& t, double& h) const {
    h = x_[i + 1] - x_[i];
    t = (x - x_[i]) / h;
  }

  static double hermite(double y0, double y1, double m0, double m1, double t,
                        double h) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * m1;
  }

  static double hermite_deriv(double y0, double y1, double m0, double m1,
                              double t, double h) {
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * h * m0 +
            (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * h * m1) /
           h;
  }

  double cdf_on(std::size_t i, double x) const {
    double t, h;
    hermite_coords(i, x, t, h);
    return hermite(p_[i], p_[i + 1], d_[i], d_[i + 1], t, h);
  }
  double pdf_on(std::size_t i, double x) const {
    double t, h;
    hermite_coords(i, x, t, h);
    return hermite_deriv(p_[i], p_[i + 1], d_[i], d_[i + 1], t, h);
  }

  std::vector<double> x_, p_, d_;
};

}  // namespace detail

ReferenceCdf ReferenceCdf::std_normal() { return ReferenceCdf(RefKind::StdNormal); }

ReferenceCdf ReferenceCdf::uniform01() { return ReferenceCdf(RefKind::Uniform01); }

ReferenceCdf ReferenceCdf::tabulated(std::vector<double> x, std::vector<double> p) {
  ReferenceCdf r(RefKind::UserTabulated);
  r.tab_ = std::make_shared<const detail::TabulatedCdf>(std::move(x), std::move(p));
  return r;
}

double ReferenceCdf::cdf(double x) const {
  switch (kind_) {
    case RefKind::StdNormal:
      return std_normal_cdf(x);
    case RefKind::Uniform01:
      return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x);
    case RefKind::UserTabulated:
      return tab_->cdf(x);
  }
  return 0.0;
}

double ReferenceCdf::pdf(double x) const {
  switch (kind_) {
    case RefKind::StdNormal:
      return std_normal_pdf(x);
    case RefKind::Uniform01:
      return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
    case RefKind::UserTabulated:
      return tab_->pdf(x);
  }
  return 0.0;
}

double ReferenceCdf::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("ReferenceCdf::quantile: p must lie in (0,1)");
  }
  switch (kind_) {
    case RefKind::StdNormal:
      return std_normal_quantile(p);
    case RefKind::Uniform01:
      return p;
    case RefKind::UserTabulated:
      return tab_->quantile(p);
  }
  return 0.0;
}

}  // namespace ccgof
