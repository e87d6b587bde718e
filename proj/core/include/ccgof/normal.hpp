#pragma once

namespace ccgof {

// Standard normal density.
double std_normal_pdf(double x);

// Standard normal CDF, absolute error below 1e-12 over the real line.
double std_normal_cdf(double x);

// Standard normal quantile. Rational initial guess (Acklam) polished by one
// Halley step against the CDF; relative error below 1e-10 for
// p in [1e-12, 1-1e-12]. Throws std::domain_error for p outside (0,1).
// std_normal_quantile(0.5) is exactly 0.
double std_normal_quantile(double p);

}  // namespace ccgof
