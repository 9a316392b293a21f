// Real gamma function via the Lanczos approximation (g = 7, 9 coefficients)
// with the reflection formula for arguments left of 0.5.
#pragma once

namespace fracdimer {

// Gamma(x) for real x.  Poles (x = 0, -1, -2, ...) return +/-infinity.
double gamma_fn(double x);

// 1/Gamma(x); exactly 0.0 at the poles, which is what asymptotic tails need.
double recip_gamma(double x);

}  // namespace fracdimer
