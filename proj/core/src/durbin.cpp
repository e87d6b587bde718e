#include "ccgof/durbin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ccgof/errors.hpp"
#include "ccgof/normal.hpp"

namespace ccgof {

namespace {
constexpr double kGuard = 1e-8;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

double durbin_rho1(double t) { return std_normal_pdf(std_normal_quantile(t)); }

double durbin_rho2(double t) {
  const double z = std_normal_quantile(t);
  return kInvSqrt2 * std_normal_pdf(z) * z;
}

double durbin_rho(double t, double v) {
  return std::min(t, v) - t * v - durbin_rho1(t) * durbin_rho1(v) -
         durbin_rho2(t) * durbin_rho2(v);
}

double durbin_sigma(double p) {
  if (!(p > kGuard && p < 1.0 - kGuard)) {
    throw std::domain_error("durbin_sigma: p outside guarded interval");
  }
  const double z = std_normal_quantile(p);
  const double r1 = std_normal_pdf(z);
  const double r2 = kInvSqrt2 * r1 * z;
  const double radicand = p * (1.0 - p) - r1 * r1 - r2 * r2;
  if (!(radicand > 0.0)) {
    throw NumericError("durbin_sigma: non-positive radicand at p=" +
                       std::to_string(p));
  }
  return std::sqrt(radicand);
}

}  // namespace ccgof
