// The quadruple coefficient sum S(theta), its Euler-product / Dirichlet
// series counterparts, and the Mellin kernels V, H*, H used to bound it.
// S itself is evaluated by brute force; the kernels are verified as
// identities, not used as an evaluation route.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mz/util.hpp"

namespace mz {

struct SThetaOptions {
    unsigned threads = 1;
    bool deterministic = false;  // forces single-threaded summation
    bool force_cap = false;      // lifts the X <= 512 cost guard
};

// Exact quadruple sum over 1 <= n_i <= X of
//   beta_{n1} beta_{n2} beta_{n3} beta_{n4} (n2^2/n4^2 + n4^2/n2^2)^{(theta-3)/2}
//   * gcd(n1 n2, n3 n4)^{1-theta} n1^theta n3^theta / (n1 n2 n3 n4).
// Parallel partition over n1; per-worker compensated accumulators merged in
// ascending order, so results are bit-stable for a fixed worker count.
double s_theta(double X, double theta, const SThetaOptions& opts = {});

// The windowed Mellin weight: the cosh factor times the four log factors,
// zero outside (0, X)^4.
double mellin_weight_m(double x1, double x2, double x3, double x4, double X,
                       double theta);

struct SThetaScanRow {
    double X, theta, S, normalized, seconds;
};
std::vector<SThetaScanRow> s_theta_scan(const std::vector<double>& Xs,
                                        const std::vector<double>& thetas,
                                        const SThetaOptions& opts = {});

// Local Euler factor at p: the k-tuple sum truncated at k1+..+k4 <= kmax.
cplx local_factor_direct(std::uint64_t p, cplx s1, cplx s2, cplx s3, cplx s4,
                         double theta, int kmax);

// The 8-factor closed form without the (1 + O(p^{-3/2})) correction.
cplx local_factor_closed(std::uint64_t p, cplx s1, cplx s2, cplx s3, cplx s4,
                         double theta);

// Truncation of the quadruple Dirichlet series over n_i <= N. Internally the
// gcd weight is unfolded through its divisor convolution, which reproduces
// the quadruple sum exactly in O(N^2 log N) instead of O(N^4).
cplx f_series_direct(cplx s1, cplx s2, cplx s3, cplx s4, double theta,
                     std::uint32_t N);

// prod_{p <= pmax} local_factor_direct(p, ..., kmax), ascending p.
cplx euler_product_f(cplx s1, cplx s2, cplx s3, cplx s4, double theta,
                     std::uint64_t pmax, int kmax);

// V(s) = int_0^inf cosh(2w)^{(theta-3)/2} e^{-sw} dw and its derivative.
cplx kernel_V(cplx s, double theta);
cplx kernel_V_prime(cplx s, double theta);

// H*(s2,s4) by 2-D adaptive quadrature, and the closed form
// (V(s2)+V(s4))/(s2+s4); the pair is an identity check.
cplx kernel_Hstar(cplx s2, cplx s4, double theta);
cplx kernel_Hstar_closed(cplx s2, cplx s4, double theta);

// H = 2(V(s2)+V(s4))/(s2+s4)^3 - (V'(s2)+V'(s4))/(s2+s4)^2.
cplx kernel_H(cplx s2, cplx s4, double theta);

}  // namespace mz
