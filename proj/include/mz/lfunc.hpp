// Completed L-function machinery for odd primitive characters: the smoothed
// two-sided incomplete-gamma evaluation of xi(s,chi), the unimodular
// normalizer c(chi) fitted so that c*xi is real on the critical line, the
// real-valued Xi(t), and F(u) = Xi(u) |phi(1/2+iu)|^2.
//
// The raw Dirichlet series diverges on the critical line; every evaluation
// here goes through
//   xi(s,chi) = S(s,chi) + eps(chi) * S(1-s, conj chi),
//   S(s,chi)  = sum_n chi(n) n (pi n^2/P)^{-(s+1)/2} Gamma((s+1)/2, pi n^2/P),
// truncated once pi n^2 / P > 40 (dropped tail < 1e-16 of the term scale).
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mz/characters.hpp"
#include "mz/mollifier.hpp"

namespace mz {

struct BigXiEval {
    double value = 0.0;     // Re(c * xi(1/2 + i t))
    double rel_imag = 0.0;  // |Im| / (|xi| + eps), the quality metric
    bool trusted = true;    // false once rel_imag exceeds 1e-6
};

class CompletedLContext {
  public:
    // Builds the context for odd j: root number from the Gauss sum, c(chi)
    // from the phase fit at 1/2 + i*eps0 (retry ladder doubles eps0 when the
    // probe lands on a near-zero), then a 64-point realness audit on [0,1].
    CompletedLContext(const CharacterTable& tbl, std::uint32_t j);

    cplx xi(cplx s) const;
    BigXiEval big_xi(double t) const;

    // F(u); phi factor comes from `coeffs` (pass nullptr for phi == 1).
    BigXiEval f_big(const MollifierCoeffs* coeffs, double u) const;

    const CharacterTable& table() const { return *tbl_; }
    std::uint32_t index() const { return j_; }
    cplx c_chi() const { return c_chi_; }
    cplx root_number() const { return root_number_; }
    double fit_residual() const { return fit_residual_; }
    bool root_number_consistent() const { return root_consistent_; }
    double scale() const { return scale_; }  // coarse |xi| magnitude on the line

  private:
    cplx one_sided(cplx s, std::uint32_t j) const;

    const CharacterTable* tbl_;
    std::uint32_t j_, j_conj_;
    cplx c_chi_{1.0, 0.0};
    cplx root_number_{1.0, 0.0};
    double fit_residual_ = 0.0;
    bool root_consistent_ = true;
    double scale_ = 1.0;
    int n_max_ = 1;
    std::vector<double> xn_;  // pi n^2 / P
};

// Free-function spellings for the module's public operations.
cplx xi_value(const CompletedLContext& ctx, cplx s);
cplx c_chi_fit(const CharacterTable& tbl, std::uint32_t j);
double big_xi(const CompletedLContext& ctx, double t);
double f_big(const CompletedLContext& ctx, const MollifierCoeffs& coeffs, double u);

// Truncated Dirichlet series sum_{n<=cutoff} chi(n) n^{-s}; cross-check
// oracle only, the error near the line is O(P^{-1/4} log P).
cplx l_value_truncated(const CharacterTable& tbl, std::uint32_t j, cplx s,
                       std::uint64_t cutoff);

}  // namespace mz
