#include "mz/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mz {

namespace {
using cplx = std::complex<double>;

// B_{2k} / (2k (2k-1)) for the Stirling tail, k = 1..8.
constexpr double kStirling[8] = {
    1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
}  // namespace

cplx log_gamma(cplx z) {
    if (!(z.real() > 0.0))
        throw std::invalid_argument("log_gamma: requires Re z > 0 (poles at nonpositive integers)");
    cplx shift = 0.0;
    while (std::abs(z) < 12.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    const cplx zi = 1.0 / z;
    const cplx zi2 = zi * zi;
    cplx tail = 0.0;
    cplx zpow = zi;
    for (double c : kStirling) {
        tail += c * zpow;
        zpow *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + tail + shift;
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

namespace {

// Lentz continued fraction for Gamma(a,x) * x^{-a} * e^{x}.
cplx gamma_upper_cf(cplx a, double x, int max_iter = 600) {
    const double tiny = 1e-290;
    cplx b = x + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= max_iter; ++i) {
        const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h;
    }
    throw std::runtime_error("incomplete_gamma_upper: continued fraction did not converge");
}

// sum_{k>=0} x^k / (a (a+1) ... (a+k)); lower-gamma series without x^a e^{-x}.
cplx lower_series(cplx a, double x, int max_iter = 2000) {
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int k = 1; k <= max_iter; ++k) {
        term *= x / (a + static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("incomplete_gamma_upper: series did not converge");
}

bool use_series(cplx a, double x) {
    // Continued fraction degrades when |a| dominates x; the series complement
    // is stable there because successive denominators grow like |a|.
    if (std::abs(a) < 1e-8) return false;  // near the Gamma(0) pole only the CF applies
    return x < std::max(a.real() + 1.0, 0.5 * std::abs(a.imag()));
}

// log Gamma valid slightly left of the imaginary axis, up to a multiple of
// 2*pi*i (harmless: callers exponentiate).
cplx lgamma_for_exp(cplx a) {
    if (a.real() > 0.25) return log_gamma(a);
    return log_gamma(a + 1.0) - std::log(a);
}

}  // namespace

cplx incomplete_gamma_upper(cplx a, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("incomplete_gamma_upper: requires x > 0");
    if (use_series(a, x)) {
        const cplx gamma_lower = std::exp(a * std::log(x) - x) * lower_series(a, x);
        return std::exp(lgamma_for_exp(a)) - gamma_lower;
    }
    return std::exp(-x + a * std::log(x)) * gamma_upper_cf(a, x);
}

cplx gamma_upper_scaled(cplx a, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_upper_scaled: requires x > 0");
    if (use_series(a, x)) {
        return std::exp(lgamma_for_exp(a) - a * std::log(x)) - std::exp(-x) * lower_series(a, x);
    }
    return std::exp(-x) * gamma_upper_cf(a, x);
}

}  // namespace mz
