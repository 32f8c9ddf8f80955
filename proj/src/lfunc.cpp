#include "mz/lfunc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mz/specfun.hpp"

namespace mz {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGamma34 = 1.2254167024651776451290983034;  // Gamma(3/4)
}  // namespace

CompletedLContext::CompletedLContext(const CharacterTable& tbl, std::uint32_t j)
    : tbl_(&tbl), j_(j), j_conj_(tbl.conj_index(j)) {
    if (!tbl.is_odd(j))
        throw std::invalid_argument("CompletedLContext: character index must be odd");
    const double P = static_cast<double>(tbl.modulus());

    n_max_ = static_cast<int>(std::ceil(std::sqrt(40.0 * P / kPi)));
    xn_.resize(static_cast<std::size_t>(n_max_) + 1);
    for (int n = 1; n <= n_max_; ++n)
        xn_[static_cast<std::size_t>(n)] = kPi * static_cast<double>(n) * static_cast<double>(n) / P;

    root_number_ = gauss_sum(tbl, j) / (cplx{0.0, 1.0} * std::sqrt(P));
    scale_ = std::pow(P / kPi, 0.75) * kGamma34;

    // c(chi): phase of xi just off the center point, with a retry ladder in
    // case the probe sits on top of a zero.
    double eps0 = 1e-3;
    cplx z;
    for (int attempt = 0;; ++attempt) {
        z = xi(cplx{0.5, eps0});
        if (std::abs(z) >= 1e-12 * scale_) break;
        if (attempt >= 10)
            throw std::runtime_error("c_chi fit: xi vanished on every probe of the retry ladder");
        eps0 *= 2.0;
    }
    c_chi_ = std::abs(z) / z;

    // realness audit on a 64-point grid over [0,1]
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        const double t = static_cast<double>(k) / 63.0;
        const cplx v = c_chi_ * xi(cplx{0.5, t});
        worst = std::max(worst, std::abs(v.imag()) / (std::abs(v) + std::numeric_limits<double>::epsilon()));
    }
    fit_residual_ = worst;

    // Independent prediction from the functional equation: c^2 * eps = 1.
    root_consistent_ = std::abs(c_chi_ * c_chi_ * root_number_ - 1.0) <= 1e-6;
}

cplx CompletedLContext::one_sided(cplx s, std::uint32_t j) const {
    const cplx a = 0.5 * (s + 1.0);
    NeumaierCSum acc;
    for (int n = 1; n <= n_max_; ++n) {
        const cplx ch = tbl_->chi(j, n);
        if (ch == cplx{0.0, 0.0}) continue;
        acc.add(ch * static_cast<double>(n) * gamma_upper_scaled(a, xn_[static_cast<std::size_t>(n)]));
    }
    return acc.value();
}

cplx CompletedLContext::xi(cplx s) const {
    return one_sided(s, j_) + root_number_ * one_sided(1.0 - s, j_conj_);
}

BigXiEval CompletedLContext::big_xi(double t) const {
    const cplx v = c_chi_ * xi(cplx{0.5, t});
    BigXiEval out;
    out.value = v.real();
    out.rel_imag = std::abs(v.imag()) / (std::abs(v) + std::numeric_limits<double>::epsilon());
    out.trusted = out.rel_imag <= 1e-6;
    return out;
}

BigXiEval CompletedLContext::f_big(const MollifierCoeffs* coeffs, double u) const {
    BigXiEval out = big_xi(u);
    if (coeffs != nullptr && coeffs->max_n() > 1) {
        const cplx p = phi_value(*coeffs, *tbl_, j_, cplx{0.5, u});
        out.value *= std::norm(p);
    }
    return out;
}

cplx xi_value(const CompletedLContext& ctx, cplx s) { return ctx.xi(s); }

cplx c_chi_fit(const CharacterTable& tbl, std::uint32_t j) {
    return CompletedLContext(tbl, j).c_chi();
}

double big_xi(const CompletedLContext& ctx, double t) { return ctx.big_xi(t).value; }

double f_big(const CompletedLContext& ctx, const MollifierCoeffs& coeffs, double u) {
    return ctx.f_big(&coeffs, u).value;
}

cplx l_value_truncated(const CharacterTable& tbl, std::uint32_t j, cplx s,
                       std::uint64_t cutoff) {
    if (cutoff < tbl.modulus())
        throw std::invalid_argument("l_value_truncated: cutoff must be at least the modulus");
    NeumaierCSum acc;
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        const cplx ch = tbl.chi(j, static_cast<std::int64_t>(n));
        if (ch == cplx{0.0, 0.0}) continue;
        acc.add(ch * std::exp(-s * std::log(static_cast<double>(n))));
    }
    return acc.value();
}

}  // namespace mz
