#include "mz/selberg.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mz/quadrature.hpp"
#include "mz/specfun.hpp"
#include "mz/stheta.hpp"

namespace mz {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kVarpiCrossover = 0.05;
}  // namespace

SelbergParams SelbergParams::make(std::uint64_t P, double T, double X_override,
                                  double c1, double c2, double h_override,
                                  double grid_override, double margin_override) {
    if (!(T > 0.0 && T <= 1.0))
        throw std::invalid_argument("SelbergParams: T must lie in (0, 1]");
    SelbergParams p;
    p.P = P;
    p.T = T;
    p.c1 = c1;
    p.c2 = c2;
    const double logP = std::log(static_cast<double>(P));
    p.X = X_override > 0.0 ? X_override : std::pow(static_cast<double>(P), 1.0 / 16.0);
    p.h = h_override > 0.0 ? h_override : c2 / (T * std::sqrt(logP));
    p.G = std::exp(1.0 / p.h);
    p.grid_step = grid_override > 0.0 ? grid_override : p.h / 8.0;
    if (p.grid_step > p.h / 8.0 + 1e-15)
        throw std::invalid_argument("SelbergParams: grid_step must be <= h/8");
    p.margin = margin_override;
    return p;
}

double varpi_direct_sum(double y) {
    if (!(y > 0.0)) throw std::invalid_argument("varpi: requires y > 0");
    NeumaierSum acc;
    for (int r = 1;; ++r) {
        const double term = 2.0 * static_cast<double>(r) * r * std::exp(-kPi * r * r * y);
        acc.add(term);
        if (term < 1e-18 * acc.value()) break;
    }
    return acc.value();
}

double varpi_modular(double y) {
    if (!(y > 0.0)) throw std::invalid_argument("varpi: requires y > 0");
    // sum_r ((1/2pi) y^{-3/2} - r^2 y^{-5/2}) e^{-pi r^2 / y}
    const double a = std::pow(y, -1.5) / (2.0 * kPi);
    const double b = std::pow(y, -2.5);
    NeumaierSum acc;
    acc.add(a);  // r = 0
    for (int r = 1;; ++r) {
        const double e = std::exp(-kPi * r * r / y);
        const double term = 2.0 * (a - static_cast<double>(r) * r * b) * e;
        acc.add(term);
        if (std::abs(term) < 1e-18 * std::abs(acc.value()) || e == 0.0) break;
    }
    return acc.value();
}

double varpi(double y) {
    if (!(y > 0.0)) throw std::invalid_argument("varpi: requires y > 0");
    return y < kVarpiCrossover ? varpi_modular(y) : varpi_direct_sum(y);
}

double k_theta(double theta) {
    if (!(theta >= 0.0 && theta <= 0.125 + 1e-12))
        throw std::invalid_argument("k_theta: theta must lie in [0, 1/8]");
    const double e = 0.5 * (1.0 - theta);
    auto low = [&](double y) {
        return std::pow(y, e) * (varpi(y) - std::pow(y, -1.5) / (2.0 * kPi));
    };
    auto high = [&](double y) { return std::pow(y, e) * varpi(y); };
    // varpi(y) < 1e-18 beyond ~ y = 14; the integrand near 0 vanishes
    // because the y^{-3/2} singularity is subtracted.
    const double lo = integrate_segments<double>(low, {0.0, kVarpiCrossover, 0.3, 1.0},
                                                 {.rel_tol = 1e-9, .abs_tol = 1e-15});
    const double hi = integrate<double>(high, 1.0, 14.5, {.rel_tol = 1e-9});
    return lo + hi;
}

namespace {

// sum_{mu,nu <= X} sum_{n != 0} chi(n mu) k(nu) (n mu b_mu b_nu / nu^2)
//   exp(-pi n^2 mu^2 x^2 / (P nu^2)),
// where k(nu) is conj(chi(nu)) or chi(nu) by pairing. Terms at n and -n agree
// for odd chi, so the n-sum is folded to twice the positive side.
cplx theta_double_sum(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                      double x, ThetaPairing pairing) {
    const CharacterTable& tbl = ctx.table();
    const std::uint32_t j = ctx.index();
    const double P = static_cast<double>(tbl.modulus());
    NeumaierCSum acc;
    for (std::size_t mu = 1; mu <= coeffs.max_n(); ++mu) {
        if (coeffs.beta[mu] == 0.0) continue;
        for (std::size_t nu = 1; nu <= coeffs.max_n(); ++nu) {
            if (coeffs.beta[nu] == 0.0) continue;
            const cplx knu = pairing == ThetaPairing::conjugated
                                 ? std::conj(tbl.chi(j, static_cast<std::int64_t>(nu)))
                                 : tbl.chi(j, static_cast<std::int64_t>(nu));
            if (knu == cplx{0.0, 0.0}) continue;
            const double w = static_cast<double>(mu) * coeffs.beta[mu] * coeffs.beta[nu] /
                             (static_cast<double>(nu) * static_cast<double>(nu));
            const double decay = kPi * static_cast<double>(mu * mu) * x * x /
                                 (P * static_cast<double>(nu * nu));
            for (int n = 1;; ++n) {
                const double ex = decay * n * n;
                if (ex > 42.0) break;
                const cplx ch = tbl.chi(j, static_cast<std::int64_t>(n * mu));
                if (ch == cplx{0.0, 0.0}) continue;
                acc.add(2.0 * ch * knu * (static_cast<double>(n) * w) * std::exp(-ex));
            }
        }
    }
    return acc.value();
}

}  // namespace

cplx f_chi_theta(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                 double y, ThetaPairing pairing) {
    return std::sqrt(2.0 * kPi) * ctx.c_chi() * std::exp(1.5 * y) *
           theta_double_sum(ctx, coeffs, std::exp(y), pairing);
}

cplx g_chi(const CompletedLContext& ctx, const MollifierCoeffs& coeffs, double x,
           ThetaPairing pairing) {
    if (!(x >= 1.0)) throw std::invalid_argument("g_chi: requires x >= 1");
    return x * theta_double_sum(ctx, coeffs, x, pairing);
}

double f_chi_quadrature_cutoff() {
    // |Gamma(3/4 + iu/2)| < 1e-16 * Gamma(3/4); the envelope is monotone.
    static const double cutoff = [] {
        const double target = std::log(1e-16) + log_gamma(cplx{0.75, 0.0}).real();
        double lo = 1.0, hi = 200.0;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double v = log_gamma(cplx{0.75, mid / 2.0}).real();
            (v > target ? lo : hi) = mid;
        }
        return hi;
    }();
    return cutoff;
}

cplx f_chi_quadrature(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                      double y) {
    const double U = f_chi_quadrature_cutoff();
    auto f = [&](double u) {
        const double F = ctx.f_big(&coeffs, u).value;
        return F * std::exp(cplx{0.0, -y * u});
    };
    const cplx total = integrate_segments<cplx>(
        f, {-U, -20.0, -6.0, 0.0, 6.0, 20.0, U}, {.rel_tol = 1e-9, .max_depth = 40,
                                                  .throw_on_failure = false});
    return total / std::sqrt(2.0 * kPi);
}

namespace {

void check_j_domain(const MollifierCoeffs& coeffs, double x, double theta) {
    const double X = coeffs.cutoff_X;
    const double theta_floor = std::min(1.0 / std::log(std::max(X, 1.0000001)), 0.125);
    if (!(theta >= theta_floor * (1.0 - 1e-12) && theta <= 0.125 + 1e-12))
        throw std::invalid_argument("j_integral: theta outside [min(1/log X, 1/8), 1/8]");
    if (!(x >= 1.0)) throw std::invalid_argument("j_integral: requires x >= 1");
}

}  // namespace

JIntegralParts j_integral_direct_parts(const CharacterTable& tbl,
                                       const MollifierCoeffs& coeffs, double x,
                                       double theta) {
    check_j_domain(coeffs, x, theta);
    const std::uint64_t P = tbl.modulus();
    const double Pd = static_cast<double>(P);
    const cplx a{0.5 * (3.0 - theta), 0.0};
    const std::size_t N = coeffs.max_n();

    NeumaierSum diag, offd;
    for (std::size_t kap = 1; kap <= N; ++kap) {
        if (coeffs.beta[kap] == 0.0) continue;
        for (std::size_t lam = 1; lam <= N; ++lam) {
            if (coeffs.beta[lam] == 0.0) continue;
            const std::uint64_t kl = kap * lam;
            if (kl % P == 0) continue;  // chi vanishes on the whole block
            const std::uint64_t inv_kl = mod_pow(kl % P, P - 2, P);
            // Gaussian cut: exponent <= 46 keeps terms above the 1e-20 scale
            const double mcut = static_cast<double>(lam) / (static_cast<double>(kap) * x) *
                                std::sqrt(46.0 * Pd / kPi);
            for (std::size_t mu = 1; mu <= N; ++mu) {
                if (coeffs.beta[mu] == 0.0) continue;
                for (std::size_t nu = 1; nu <= N; ++nu) {
                    if (coeffs.beta[nu] == 0.0) continue;
                    const std::uint64_t mn = mu * nu;
                    if (mn % P == 0) continue;
                    const double pref = static_cast<double>(kap) * static_cast<double>(mu) *
                                        coeffs.beta[kap] * coeffs.beta[lam] *
                                        coeffs.beta[mu] * coeffs.beta[nu] /
                                        (static_cast<double>(lam * lam) *
                                         static_cast<double>(nu * nu));
                    const double ncut = static_cast<double>(nu) /
                                        (static_cast<double>(mu) * x) *
                                        std::sqrt(46.0 * Pd / kPi);
                    const double cmu = static_cast<double>(mu * mu) /
                                       static_cast<double>(nu * nu);
                    const double ckap = static_cast<double>(kap * kap) /
                                        static_cast<double>(lam * lam);
                    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(ncut) + 1; ++n) {
                        if (static_cast<std::uint64_t>(n) % P == 0) continue;
                        // m with m * kap * lam == n * mu * nu (mod P)
                        const std::uint64_t m0 =
                            (static_cast<std::uint64_t>(n) % P) * (mn % P) % P * inv_kl % P;
                        std::int64_t m = static_cast<std::int64_t>(m0) -
                                         static_cast<std::int64_t>(P) *
                                             static_cast<std::int64_t>(
                                                 (m0 + static_cast<std::uint64_t>(mcut)) / P);
                        for (; m <= static_cast<std::int64_t>(mcut) + 1;
                             m += static_cast<std::int64_t>(P)) {
                            if (m == 0) continue;
                            const double A = (cmu * static_cast<double>(n) * n +
                                              ckap * static_cast<double>(m) * m) *
                                             kPi / Pd;
                            const double z = A * x * x;
                            if (z > 46.0) continue;
                            const double u_int =
                                0.5 * std::pow(A, -a.real()) *
                                incomplete_gamma_upper(a, z).real();
                            // factor 2 folds the (-m,-n) mirror of each pair
                            const double term =
                                2.0 * pref * static_cast<double>(m) * n * u_int;
                            const bool on_diagonal =
                                m > 0 && static_cast<std::uint64_t>(m) * kl ==
                                             static_cast<std::uint64_t>(n) * mn;
                            (on_diagonal ? diag : offd).add(term);
                        }
                    }
                }
            }
        }
    }
    JIntegralParts out;
    out.diagonal = (Pd - 1.0) * diag.value();
    out.off_diagonal = (Pd - 1.0) * offd.value();
    out.value = out.diagonal + out.off_diagonal;
    return out;
}

double j_integral_direct(const CharacterTable& tbl, const MollifierCoeffs& coeffs,
                         double x, double theta) {
    return j_integral_direct_parts(tbl, coeffs, x, theta).value;
}

double j_integral_formula(const CharacterTable& tbl, const MollifierCoeffs& coeffs,
                          double x, double theta) {
    check_j_domain(coeffs, x, theta);
    const double Pd = static_cast<double>(tbl.modulus());
    const double X = coeffs.cutoff_X;
    const double s0 = s_theta(X, 0.0);
    const double st = s_theta(X, theta);
    const double K = k_theta(theta);
    return (Pd - 1.0) * std::pow(Pd, 1.5) * std::pow(x, -theta) * s0 / (2.0 * kPi * theta) +
           0.5 * (Pd - 1.0) * std::pow(Pd, 0.5 * (3.0 - theta)) * (K - 1.0 / (kPi * theta)) * st;
}

namespace {

IntervalEval interval_quadrature(const CompletedLContext& ctx,
                                 const MollifierCoeffs& coeffs, double t, double h,
                                 bool absolute_value, double abs_floor) {
    if (!(h > 0.0)) throw std::invalid_argument("interval functional: requires h > 0");
    IntervalEval out;
    auto f = [&](double u) {
        const BigXiEval e = ctx.f_big(&coeffs, u);
        if (!e.trusted) out.trusted = false;
        out.eval_error = std::max(out.eval_error, e.rel_imag * std::abs(e.value));
        return absolute_value ? std::abs(e.value) : e.value;
    };
    const double v = integrate<double>(f, t, t + h,
                                       {.rel_tol = 1e-8, .abs_tol = abs_floor,
                                        .max_depth = 34, .throw_on_failure = false});
    out.value = absolute_value ? v : std::abs(v);
    return out;
}

}  // namespace

IntervalEval i_interval(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                        double t, double h, double abs_floor) {
    return interval_quadrature(ctx, coeffs, t, h, /*absolute_value=*/false, abs_floor);
}

IntervalEval j_interval(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                        double t, double h, double abs_floor) {
    return interval_quadrature(ctx, coeffs, t, h, /*absolute_value=*/true, abs_floor);
}

DetectionResult detect_E(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                         const SelbergParams& params) {
    DetectionResult out;
    const double h = params.h;

    // margin: 10^3 x the certified per-evaluation error of F, integrated
    // over the window (realness residual plus the quadrature tolerance).
    double f_scale = 0.0;
    for (int k = 0; k <= 8; ++k) {
        const double u = params.T * static_cast<double>(k) / 8.0;
        f_scale = std::max(f_scale, std::abs(ctx.f_big(&coeffs, u).value));
    }
    const double eval_err = f_scale * (std::max(ctx.fit_residual(), 1e-13) + 1e-8);
    out.margin = params.margin > 0.0 ? params.margin : 1e3 * h * eval_err;

    for (double t = -h + params.grid_step; t < params.T; t += params.grid_step) {
        const IntervalEval iv = i_interval(ctx, coeffs, t, h, out.margin * 0.01);
        const IntervalEval jv = j_interval(ctx, coeffs, t, h, out.margin * 0.01);
        if (!iv.trusted || !jv.trusted) {
            ++out.flagged_intervals;
            continue;
        }
        if (jv.value - iv.value > out.margin)
            out.certificates.push_back({t, iv.value, jv.value});
    }
    out.mu_proxy = params.grid_step * static_cast<double>(out.certificates.size());
    return out;
}

}  // namespace mz
