// Complex log-gamma and the upper incomplete gamma function.
#pragma once

#include <complex>

namespace mz {

// Principal log Gamma(z), valid for Re z > 0 (throws otherwise). Stirling
// with Bernoulli correction after shifting |z| >= 12; the recurrence
// logGamma(z) = logGamma(z+1) - log z with principal logs is exact on the
// right half-plane.
std::complex<double> log_gamma(std::complex<double> z);

// Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt, x > 0 real, Re a > 0 or |Im a|
// bounded away from the poles. Continued fraction for large x, series
// complement through Gamma(a) for small x.
std::complex<double> incomplete_gamma_upper(std::complex<double> a, double x);

// x^{-a} * Gamma(a, x). The continued-fraction branch never forms x^a, so
// this stays finite where the unscaled value would over/underflow.
std::complex<double> gamma_upper_scaled(std::complex<double> a, double x);

std::complex<double> gamma_fn(std::complex<double> z);  // exp(log_gamma)

}  // namespace mz
