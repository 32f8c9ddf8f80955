// Adaptive Gauss-Kronrod 15(7) integration for real- and complex-valued
// integrands. Subdivision is depth-first on the left half so evaluation
// order (and therefore rounding) is deterministic for a given integrand.
#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace mz {

namespace detail {

// 15-point Kronrod abscissae on [-1,1] and the embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T, typename F>
void gk15(F& f, double a, double b, T& kronrod, T& gauss) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        T fsum = f(c - dx) + f(c + dx);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    kronrod = resk * h;
    gauss = resg * h;
}

}  // namespace detail

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;  // absolute floor; 0 means pure relative control
    int max_depth = 52;
    bool throw_on_failure = true;
};

template <typename T, typename F>
struct AdaptiveState {
    F* f;
    QuadOptions opt;
    double scale = 0.0;  // running magnitude used for the relative criterion
    bool converged = true;

    T recurse(double a, double b, T whole, double err_whole, int depth) {
        // Per-interval budget proportional to length, so local errors sum to
        // at most the global tolerance.
        const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);
        if (err_whole <= tol * std::max(1e-300, (b - a) / total_len)) {
            return whole;
        }
        if (depth >= opt.max_depth) {
            if (err_whole > tol) converged = false;
            return whole;
        }
        const double m = 0.5 * (a + b);
        T kl, gl, kr, gr;
        detail::gk15(*f, a, m, kl, gl);
        detail::gk15(*f, m, b, kr, gr);
        const double el = std::abs(kl - gl);
        const double er = std::abs(kr - gr);
        scale = std::max(scale, std::abs(kl + kr));
        return recurse(a, m, kl, el, depth + 1) + recurse(m, b, kr, er, depth + 1);
    }
    double total_len = 1.0;
};

// Integrate f over [a, b]. T is double or std::complex<double>.
template <typename T = double, typename F>
T integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
    if (!(a < b)) {
        if (a == b) return T{};
        throw std::invalid_argument("integrate: reversed interval");
    }
    AdaptiveState<T, F> st{&f, opt};
    st.total_len = b - a;
    T k, g;
    detail::gk15(f, a, b, k, g);
    st.scale = std::abs(k);
    T result = st.recurse(a, b, k, std::abs(k - g), 0);
    if (!st.converged && opt.throw_on_failure)
        throw QuadratureError("adaptive quadrature failed to converge to tolerance");
    return result;
}

// Integrate across explicit breakpoints (monotone increasing).
template <typename T = double, typename F>
T integrate_segments(F&& f, std::initializer_list<double> pts, const QuadOptions& opt = {}) {
    std::vector<double> p(pts);
    T total{};
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        total += integrate<T>(f, p[i], p[i + 1], opt);
    return total;
}

}  // namespace mz
