#pragma once

namespace fadesde {

// Standard normal distribution function. Accepts +/-infinity and maps them
// to 1 and 0. Absolute error below 1e-15 (delegates to erfc).
double normal_cdf(double x);

// 1 - normal_cdf(x), computed without cancellation so the deep right tail
// (x ~ 30, values ~ 1e-198) keeps full relative accuracy.
double normal_cdf_complement(double x);

// Standard normal density.
double normal_pdf(double x);

// Inverse of normal_cdf on (0,1). normal_quantile(0) = -inf,
// normal_quantile(1) = +inf; arguments outside [0,1] throw DomainError.
// Monotone; |normal_cdf(normal_quantile(u)) - u| < 4e-16 over the range
// reachable from 53-bit uniforms.
double normal_quantile(double u);

}  // namespace fadesde
