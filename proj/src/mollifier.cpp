#include "mz/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace mz {

namespace {

// binom(k - 3/2, k) for k = 0..kmax.
std::vector<double> prime_power_weights(std::size_t kmax) {
    std::vector<double> c(kmax + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= kmax; ++k)
        c[k] = c[k - 1] * (static_cast<double>(k) - 1.5) / static_cast<double>(k);
    return c;
}

std::vector<Rational> prime_power_weights_exact(std::size_t kmax) {
    std::vector<Rational> c(kmax + 1);
    c[0] = Rational(1);
    for (std::size_t k = 1; k <= kmax; ++k)
        c[k] = c[k - 1] * Rational(2 * static_cast<long long>(k) - 3, 2 * static_cast<long long>(k));
    return c;
}

std::size_t max_exponent(std::size_t N) {
    std::size_t k = 0;
    for (std::size_t v = 1; v <= N; v *= 2) ++k;
    return k;
}

}  // namespace

std::vector<double> alpha_coeffs(std::size_t N) {
    if (N == 0) throw std::invalid_argument("alpha_coeffs: N must be >= 1");
    const auto cpk = prime_power_weights(max_exponent(N));
    const auto spf = smallest_prime_factor(static_cast<std::uint32_t>(N));
    std::vector<double> a(N + 1, 0.0);
    a[1] = 1.0;
    for (std::size_t n = 2; n <= N; ++n) {
        const std::uint32_t p = spf[n];
        std::size_t m = n, e = 0;
        while (m % p == 0) { m /= p; ++e; }
        a[n] = a[m] * cpk[e];
    }
    return a;
}

std::vector<Rational> alpha_coeffs_exact(std::size_t N) {
    if (N == 0) throw std::invalid_argument("alpha_coeffs_exact: N must be >= 1");
    if (N > 4096) throw std::invalid_argument("alpha_coeffs_exact: N too large for exact arithmetic");
    const auto cpk = prime_power_weights_exact(max_exponent(N));
    const auto spf = smallest_prime_factor(static_cast<std::uint32_t>(N));
    std::vector<Rational> a(N + 1, Rational(0));
    a[1] = Rational(1);
    for (std::size_t n = 2; n <= N; ++n) {
        const std::uint32_t p = spf[n];
        std::size_t m = n, e = 0;
        while (m % p == 0) { m /= p; ++e; }
        a[n] = a[m] * cpk[e];
    }
    return a;
}

MollifierCoeffs beta_coeffs(double X) {
    if (!(X >= 1.0)) throw std::invalid_argument("beta_coeffs: cutoff X must be >= 1");
    MollifierCoeffs out;
    out.cutoff_X = X;
    const auto N = static_cast<std::size_t>(std::floor(X));
    out.alpha = alpha_coeffs(N);
    out.beta.assign(N + 1, 0.0);
    out.beta[1] = 1.0;  // log(X/1)/log X, and the defining limit at X = 1
    const double logX = std::log(X);
    for (std::size_t n = 2; n <= N; ++n)
        out.beta[n] = std::log(X / static_cast<double>(n)) / logX * out.alpha[n];
    return out;
}

cplx phi_value(const MollifierCoeffs& coeffs, const CharacterTable& tbl,
               std::uint32_t j, cplx s) {
    NeumaierCSum acc;
    for (std::size_t n = 1; n <= coeffs.max_n(); ++n) {
        if (coeffs.beta[n] == 0.0) continue;
        const cplx ch = tbl.chi(j, static_cast<std::int64_t>(n));
        if (ch == cplx{0.0, 0.0}) continue;
        acc.add(coeffs.beta[n] * ch * std::exp(-s * std::log(static_cast<double>(n))));
    }
    return acc.value();
}

}  // namespace mz
