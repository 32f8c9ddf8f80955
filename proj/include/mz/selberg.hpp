// Analytic objects for the sign-change criterion: the theta sum varpi(y) and
// its integral K(theta), the Fourier transform of F via theta sums and via
// direct quadrature, the lattice integral J(x,theta) by two routes, the
// interval functionals I and J, and the detection set E.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mz/lfunc.hpp"

namespace mz {

struct SelbergParams {
    std::uint64_t P = 0;
    double T = 1.0;
    double X = 1.0;        // mollifier cutoff actually used (recorded in reports)
    double h = 0.0;
    double G = 1.0;        // e^{1/h}
    double c1 = 1.0;
    double c2 = 1.0;
    double grid_step = 0.0;
    double margin = 0.0;      // <= 0 selects the certified-error default
    double refine_tol = 1e-9;

    // Defaults: X = P^{1/16}, h = c2/(T sqrt(log P)), G = e^{1/h},
    // grid_step = h/8. Overrides <= 0 select the default.
    static SelbergParams make(std::uint64_t P, double T, double X_override = 0.0,
                              double c1 = 1.0, double c2 = 1.0,
                              double h_override = 0.0,
                              double grid_override = 0.0,
                              double margin_override = 0.0);
};

// varpi(y) = sum_{r in Z} r^2 e^{-pi r^2 y}; direct summation for y >= 0.05,
// the modular-transformed series below that. The two branches are exposed
// separately for the crossover-consistency check.
double varpi(double y);
double varpi_direct_sum(double y);
double varpi_modular(double y);

// K(theta) = int_0^1 y^{(1-theta)/2} (varpi(y) - y^{-3/2}/(2 pi)) dy
//          + int_1^inf y^{(1-theta)/2} varpi(y) dy.
double k_theta(double theta);

// Character pairing of the nu index inside the theta double sum. The
// `conjugated` form is the Fourier transform of the real F (the quadrature
// oracle confirms it with constant exactly 1); `plain` keeps chi(nu)
// unconjugated, which is the pairing the J/S machinery is built on.
enum class ThetaPairing { conjugated, plain };

cplx f_chi_theta(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                 double y, ThetaPairing pairing = ThetaPairing::conjugated);

cplx g_chi(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
           double x, ThetaPairing pairing = ThetaPairing::conjugated);

// (1/sqrt(2 pi)) int F(u) e^{-iyu} du over |u| <= U*, with U* chosen where
// the Gamma(3/4 + iu/2) envelope falls below 1e-16 of its central value.
cplx f_chi_quadrature(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                      double y);
double f_chi_quadrature_cutoff();

// J(x,theta): lattice route (orthogonality closed form + incomplete gamma)
// and the S/K closed form. The pair is the integrated identity check.
struct JIntegralParts {
    double value = 0.0;
    double diagonal = 0.0;
    double off_diagonal = 0.0;
};
JIntegralParts j_integral_direct_parts(const CharacterTable& tbl,
                                       const MollifierCoeffs& coeffs, double x,
                                       double theta);
double j_integral_direct(const CharacterTable& tbl, const MollifierCoeffs& coeffs,
                         double x, double theta);
double j_integral_formula(const CharacterTable& tbl, const MollifierCoeffs& coeffs,
                          double x, double theta);

struct IntervalEval {
    double value = 0.0;
    bool trusted = true;
    double eval_error = 0.0;  // max absolute imaginary residual seen inside
};
IntervalEval i_interval(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                        double t, double h, double abs_floor = 0.0);
IntervalEval j_interval(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                        double t, double h, double abs_floor = 0.0);

struct ECertificate {
    double t = 0.0;
    double i_value = 0.0;
    double j_value = 0.0;
};
struct DetectionResult {
    std::vector<ECertificate> certificates;
    double margin = 0.0;      // the margin actually applied
    double mu_proxy = 0.0;    // grid_step * count
    int flagged_intervals = 0;
};
DetectionResult detect_E(const CompletedLContext& ctx, const MollifierCoeffs& coeffs,
                         const SelbergParams& params);

}  // namespace mz
