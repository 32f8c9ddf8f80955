#include "mz/stheta.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mz/mollifier.hpp"
#include "mz/quadrature.hpp"

namespace mz {

namespace {

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= 0.125 + 1e-12))
        throw std::invalid_argument("theta must lie in [0, 1/8]");
}

// binom(k-3/2, k) for k = 0..kmax
std::vector<double> binom_weights(int kmax) {
    std::vector<double> c(static_cast<std::size_t>(kmax) + 1);
    c[0] = 1.0;
    for (int k = 1; k <= kmax; ++k)
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k - 1)] * (k - 1.5) / k;
    return c;
}

}  // namespace

double s_theta(double X, double theta, const SThetaOptions& opts) {
    check_theta(theta);
    if (!(X >= 1.0)) throw std::invalid_argument("s_theta: X must be >= 1");
    if (X > kCutoffXCap && !opts.force_cap)
        throw std::invalid_argument("s_theta: X exceeds the O(X^4) cost cap of 512; set force_cap to override");

    const auto coeffs = beta_coeffs(X);
    const std::size_t N = coeffs.max_n();

    // per-coordinate weights: n1, n3 carry beta_n n^{theta-1}; n2, n4 carry beta_n / n
    std::vector<double> w13(N + 1, 0.0), w24(N + 1, 0.0);
    for (std::size_t n = 1; n <= N; ++n) {
        w13[n] = coeffs.beta[n] * std::pow(static_cast<double>(n), theta - 1.0);
        w24[n] = coeffs.beta[n] / static_cast<double>(n);
    }
    // cosh factor table over (n2, n4)
    std::vector<double> cosh_f(N * N);
    for (std::size_t n2 = 1; n2 <= N; ++n2)
        for (std::size_t n4 = 1; n4 <= N; ++n4) {
            const double r = static_cast<double>(n2 * n2) / static_cast<double>(n4 * n4);
            cosh_f[(n2 - 1) * N + (n4 - 1)] = std::pow(r + 1.0 / r, 0.5 * (theta - 3.0));
        }
    // gcd^(1-theta) lookup
    std::vector<double> gcd_pow(N * N + 1, 0.0);
    for (std::size_t g = 1; g <= N * N; ++g)
        gcd_pow[g] = std::pow(static_cast<double>(g), 1.0 - theta);

    const unsigned threads = opts.deterministic ? 1 : std::max(1u, opts.threads);
    auto chunk = [&](std::size_t lo, std::size_t hi) {
        NeumaierSum acc;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint32_t n1 = static_cast<std::uint32_t>(i + 1);
            if (w13[n1] == 0.0) continue;
            for (std::uint32_t n2 = 1; n2 <= N; ++n2) {
                if (w24[n2] == 0.0) continue;
                const std::uint32_t u12 = n1 * n2;
                const double ab = w13[n1] * w24[n2];
                const double* cosh_row = &cosh_f[(n2 - 1) * N];
                for (std::uint32_t n3 = 1; n3 <= N; ++n3) {
                    if (w13[n3] == 0.0) continue;
                    const double abc = ab * w13[n3];
                    std::uint32_t v34 = 0;
                    for (std::uint32_t n4 = 1; n4 <= N; ++n4) {
                        v34 += n3;
                        if (w24[n4] == 0.0) continue;
                        acc.add(abc * w24[n4] * cosh_row[n4 - 1] *
                                gcd_pow[std::gcd(u12, v34)]);
                    }
                }
            }
        }
        return acc;
    };
    return parallel_chunk_reduce<NeumaierSum>(N, threads, chunk).value();
}

double mellin_weight_m(double x1, double x2, double x3, double x4, double X,
                       double theta) {
    check_theta(theta);
    const double xs[4] = {x1, x2, x3, x4};
    for (double x : xs)
        if (!(x > 0.0) || x >= X) return 0.0;
    const double r = (x2 * x2) / (x4 * x4);
    const double cosh_f = std::pow(r + 1.0 / r, 0.5 * (theta - 3.0));
    const double logX = std::log(X);
    return cosh_f * std::log(X / x1) * std::log(X / x2) * std::log(X / x3) *
           std::log(X / x4) / (logX * logX * logX * logX);
}

std::vector<SThetaScanRow> s_theta_scan(const std::vector<double>& Xs,
                                        const std::vector<double>& thetas,
                                        const SThetaOptions& opts) {
    std::vector<SThetaScanRow> rows;
    rows.reserve(Xs.size() * thetas.size());
    for (double X : Xs)
        for (double theta : thetas) {
            const auto start = std::chrono::steady_clock::now();
            const double S = s_theta(X, theta, opts);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const double normalized = S * std::sqrt(std::log(X)) / std::pow(X, 2.0 * theta);
            rows.push_back({X, theta, S, normalized, secs});
        }
    return rows;
}

namespace {

void check_local_region(cplx s1, cplx s2, cplx s3, cplx s4, double theta) {
    if (!(s1.real() > theta && s3.real() > theta && s2.real() > 0.0 && s4.real() > 0.0))
        throw std::invalid_argument("local factor: outside the convergence region "
                                    "(need Re s1, Re s3 > theta and Re s2, Re s4 > 0)");
}

std::vector<cplx> power_table(double p, cplx exponent_coeff, int kmax,
                              const std::vector<double>& c) {
    // c_k * p^(-k * exponent_coeff)
    std::vector<cplx> t(static_cast<std::size_t>(kmax) + 1);
    const cplx step = std::exp(-exponent_coeff * std::log(p));
    cplx cur = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        t[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * cur;
        cur *= step;
    }
    return t;
}

}  // namespace

cplx local_factor_direct(std::uint64_t p, cplx s1, cplx s2, cplx s3, cplx s4,
                         double theta, int kmax) {
    check_theta(theta);
    check_local_region(s1, s2, s3, s4, theta);
    if (kmax < 0) throw std::invalid_argument("local_factor_direct: kmax must be >= 0");
    const double pd = static_cast<double>(p);
    const auto c = binom_weights(kmax);
    // p^{theta k} from the n1, n3 slots folds into the s1, s3 exponents
    const auto t1 = power_table(pd, s1 + 1.0 - theta, kmax, c);
    const auto t2 = power_table(pd, s2 + 1.0, kmax, c);
    const auto t3 = power_table(pd, s3 + 1.0 - theta, kmax, c);
    const auto t4 = power_table(pd, s4 + 1.0, kmax, c);
    std::vector<double> pmin(static_cast<std::size_t>(kmax) + 1);
    for (int m = 0; m <= kmax; ++m)
        pmin[static_cast<std::size_t>(m)] = std::pow(pd, (1.0 - theta) * m);

    NeumaierCSum acc;
    for (int k1 = 0; k1 <= kmax; ++k1)
        for (int k2 = 0; k2 + k1 <= kmax; ++k2) {
            const cplx t12 = t1[k1] * t2[k2];
            for (int k3 = 0; k1 + k2 + k3 <= kmax; ++k3) {
                const cplx t123 = t12 * t3[k3];
                for (int k4 = 0; k1 + k2 + k3 + k4 <= kmax; ++k4) {
                    acc.add(t123 * t4[k4] * pmin[std::min(k1 + k2, k3 + k4)]);
                }
            }
        }
    return acc.value();
}

cplx local_factor_closed(std::uint64_t p, cplx s1, cplx s2, cplx s3, cplx s4,
                         double theta) {
    check_theta(theta);
    check_local_region(s1, s2, s3, s4, theta);
    const double lp = std::log(static_cast<double>(p));
    auto pw = [&](cplx e) { return std::exp(-e * lp); };
    auto half = [](cplx z) { return std::sqrt(z); };
    auto mquarter = [](cplx z) { return std::exp(-0.25 * std::log(z)); };
    return half(1.0 - pw(s1 + 1.0 - theta)) * half(1.0 - pw(s2 + 1.0)) *
           half(1.0 - pw(s3 + 1.0 - theta)) * half(1.0 - pw(s4 + 1.0)) *
           mquarter(1.0 - pw(s1 + s3 + 1.0 - theta)) *
           mquarter(1.0 - pw(s1 + s4 + 1.0)) *
           mquarter(1.0 - pw(s2 + s3 + 1.0)) *
           mquarter(1.0 - pw(s2 + s4 + 1.0 + theta));
}

cplx f_series_direct(cplx s1, cplx s2, cplx s3, cplx s4, double theta,
                     std::uint32_t N) {
    check_theta(theta);
    if (N == 0) throw std::invalid_argument("f_series_direct: N must be >= 1");
    if (N > 400) throw std::invalid_argument("f_series_direct: N capped at 400");
    if (!(s1.real() >= 2.0 && s2.real() >= 2.0 && s3.real() >= 2.0 && s4.real() >= 2.0))
        throw std::invalid_argument("f_series_direct: requires Re s_i >= 2");

    const auto alpha = alpha_coeffs(N);
    auto coord = [&](cplx s, bool with_theta) {
        std::vector<cplx> w(N + 1);
        for (std::uint32_t n = 1; n <= N; ++n) {
            const double ln = std::log(static_cast<double>(n));
            const cplx e = with_theta ? (s + 1.0 - theta) : (s + 1.0);
            w[n] = alpha[n] * std::exp(-e * ln);
        }
        return w;
    };
    const auto A = coord(s1, true);
    const auto B = coord(s2, false);
    const auto C = coord(s3, true);
    const auto D = coord(s4, false);

    const std::size_t M = static_cast<std::size_t>(N) * N;

    // pair-product weights by product value, then divisor sums
    auto pair_weight = [&](const std::vector<cplx>& U, const std::vector<cplx>& V) {
        std::vector<cplx> w(M + 1, cplx{0.0, 0.0});
        for (std::uint32_t a = 1; a <= N; ++a)
            for (std::uint32_t b = 1; b <= N; ++b)
                w[static_cast<std::size_t>(a) * b] += U[a] * V[b];
        std::vector<cplx> s(M + 1, cplx{0.0, 0.0});
        for (std::size_t d = 1; d <= M; ++d)
            for (std::size_t v = d; v <= M; v += d) s[d] += w[v];
        return s;
    };
    const auto SAB = pair_weight(A, B);
    const auto SCD = pair_weight(C, D);

    // J = (n -> n^{1-theta}) * mu, so sum_{d | g} J(d) = g^{1-theta} exactly
    const auto spf = smallest_prime_factor(static_cast<std::uint32_t>(M));
    std::vector<double> J(M + 1, 0.0);
    J[1] = 1.0;
    for (std::size_t d = 2; d <= M; ++d) {
        const std::uint32_t p = spf[d];
        const std::size_t m = d / p;
        const double pp = std::pow(static_cast<double>(p), 1.0 - theta);
        J[d] = (m % p == 0) ? J[m] * pp : J[m] * (pp - 1.0);
    }

    NeumaierCSum acc;
    for (std::size_t d = 1; d <= M; ++d) acc.add(J[d] * SAB[d] * SCD[d]);
    return acc.value();
}

cplx euler_product_f(cplx s1, cplx s2, cplx s3, cplx s4, double theta,
                     std::uint64_t pmax, int kmax) {
    cplx prod = 1.0;
    for (std::uint32_t p : primes_up_to(pmax))
        prod *= local_factor_direct(p, s1, s2, s3, s4, theta, kmax);
    return prod;
}

namespace {

double kernel_cut(double theta, double sigma) {
    return 43.0 / (3.0 - theta + std::max(sigma, 0.0));
}

}  // namespace

cplx kernel_V(cplx s, double theta) {
    check_theta(theta);
    const double wstar = kernel_cut(theta, s.real());
    auto f = [&](double w) {
        return std::pow(std::cosh(2.0 * w), 0.5 * (theta - 3.0)) * std::exp(-s * w);
    };
    return integrate<cplx>(f, 0.0, wstar, {.rel_tol = 1e-10});
}

cplx kernel_V_prime(cplx s, double theta) {
    check_theta(theta);
    const double wstar = kernel_cut(theta, s.real());
    auto f = [&](double w) {
        return -w * std::pow(std::cosh(2.0 * w), 0.5 * (theta - 3.0)) * std::exp(-s * w);
    };
    return integrate<cplx>(f, 0.0, wstar, {.rel_tol = 1e-10});
}

cplx kernel_Hstar(cplx s2, cplx s4, double theta) {
    check_theta(theta);
    if (!(s2.real() > 0.0 && s4.real() > 0.0))
        throw std::invalid_argument("kernel_Hstar: requires Re s2, Re s4 > 0");
    const double ymax = 45.0 / (s2.real() + s4.real()) + 18.0;
    auto inner = [&](double y2) {
        const double cut = (43.0 + (3.0 - theta) * y2) / (3.0 - theta + s4.real());
        auto f4 = [&](double y4) {
            return std::pow(std::cosh(2.0 * (y2 - y4)), 0.5 * (theta - 3.0)) *
                   std::exp(-s4 * y4);
        };
        // breakpoint at the cosh peak y4 = y2
        if (y2 > 0.0 && y2 < cut)
            return integrate_segments<cplx>(f4, {0.0, y2, cut}, {.rel_tol = 1e-9});
        return integrate<cplx>(f4, 0.0, cut, {.rel_tol = 1e-9});
    };
    auto f2 = [&](double y2) { return inner(y2) * std::exp(-s2 * y2); };
    return integrate<cplx>(f2, 0.0, ymax, {.rel_tol = 1e-8});
}

cplx kernel_Hstar_closed(cplx s2, cplx s4, double theta) {
    check_theta(theta);
    if (std::abs(s2 + s4) < 1e-14)
        throw std::invalid_argument("kernel_Hstar_closed: pole at s2 + s4 = 0");
    return (kernel_V(s2, theta) + kernel_V(s4, theta)) / (s2 + s4);
}

cplx kernel_H(cplx s2, cplx s4, double theta) {
    check_theta(theta);
    const cplx sum = s2 + s4;
    if (std::abs(sum) < 1e-14)
        throw std::invalid_argument("kernel_H: pole at s2 + s4 = 0");
    const cplx v = kernel_V(s2, theta) + kernel_V(s4, theta);
    const cplx vp = kernel_V_prime(s2, theta) + kernel_V_prime(s4, theta);
    return 2.0 * v / (sum * sum * sum) - vp / (sum * sum);
}

}  // namespace mz
