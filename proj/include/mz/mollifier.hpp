// Coefficients of 1/sqrt(zeta): alpha_n multiplicative with alpha_{p^k} =
// binom(k-3/2, k), the log-smoothed truncation beta_n, and the mollifier
// Dirichlet polynomial phi(s) = sum beta_n chi(n) n^{-s}.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mz/characters.hpp"
#include "mz/util.hpp"

namespace mz {

// alpha_1..alpha_N (slot 0 unused). Prime-power values come from the
// recurrence binom(k-3/2,k) = binom(k-5/2,k-1)*(k-3/2)/k and spread
// multiplicatively through a smallest-prime-factor sieve.
std::vector<double> alpha_coeffs(std::size_t N);

// Exact rational variant for the convolution identity tests (N <= 4096).
std::vector<Rational> alpha_coeffs_exact(std::size_t N);

struct MollifierCoeffs {
    double cutoff_X = 1.0;
    std::vector<double> alpha;  // 1..floor(X)
    std::vector<double> beta;   // beta_n = log(X/n)/log(X) * alpha_n, beta_1 = 1

    std::size_t max_n() const { return beta.empty() ? 0 : beta.size() - 1; }
};

MollifierCoeffs beta_coeffs(double X);  // throws for X < 1

// phi(s) = sum_{n <= X} beta_n chi_j(n) n^{-s}, compensated, ascending n.
cplx phi_value(const MollifierCoeffs& coeffs, const CharacterTable& tbl,
               std::uint32_t j, cplx s);

}  // namespace mz
