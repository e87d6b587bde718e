#pragma once

namespace ccgof {

// Limiting covariance of the estimated empirical process when a Gaussian
// location-scale null is fitted by maximum likelihood:
//   rho(t,v) = min(t,v) - t v - rho1(t) rho1(v) - rho2(t) rho2(v),
//   rho1(t)  = pdf(quantile(t)),
//   rho2(t)  = pdf(quantile(t)) * quantile(t) / sqrt(2).
// Kernels for other estimators or families would slot in beside these; only
// the Gaussian-MLE kernel is provided.
double durbin_rho1(double t);
double durbin_rho2(double t);
double durbin_rho(double t, double v);

// sigma(p) = sqrt(rho(p,p)). Guard band: p must lie in (1e-8, 1-1e-8); the
// dyadic grid never leaves [1/2^(S+1), 1-1/2^(S+1)] for S <= 20, so the guard
// only catches misuse. A non-positive radicand (impossible analytically on
// (0,1)) raises NumericError rather than being clamped.
double durbin_sigma(double p);

}  // namespace ccgof
