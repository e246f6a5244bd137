#pragma once

// Self-contained special functions: real gamma (Lanczos) and Kummer's
// confluent hypergeometric 1F1 by direct Taylor series.  Every value comes
// with an absolute error estimate so downstream matching code can detect
// loss of significance instead of silently degrading.

namespace semiwell::specfun {

struct SpecialValue {
    double value = 0.0;
    double est_abs_error = 0.0;
};

// Gamma(x) for real x.  Throws PoleError when x is a non-positive integer
// (within 1e-12); relative accuracy better than 1e-13 on [-30, 30] away
// from the poles.
SpecialValue gamma(double x);

// 1F1(a, c; z) summed as a plain Taylor series with term recurrence
// t_{n+1} = t_n (a+n) z / ((c+n)(n+1)).  Certified for |z| <= 25.
// The est_abs_error channel carries a cancellation estimate
// (largest partial-sum magnitude times machine epsilon).
SpecialValue kummer_1f1(double a, double c, double z);

// d/dz 1F1(a, c; z) = (a/c) 1F1(a+1, c+1; z).
SpecialValue kummer_1f1_dz(double a, double c, double z);

// Largest |z| the series path is certified for.
inline constexpr double kSeriesDomain = 25.0;

}  // namespace semiwell::specfun
