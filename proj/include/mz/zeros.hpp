// Certified sign-change zero counting on the critical line and the
// desk-scale box-counting report. A zero is only counted when it carries a
// bracket whose endpoint values clear the certification margin; grid cells
// with untrusted evaluations are excluded and warned about, never counted.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mz/selberg.hpp"

namespace mz {

struct ZeroBracket {
    double lo = 0.0, hi = 0.0;
    double f_lo = 0.0, f_hi = 0.0;
    bool margin_ok = false;
};

// Evaluation returning std::nullopt marks the point untrusted.
using ScanFn = std::function<std::optional<double>(double)>;

struct ScanResult {
    std::vector<ZeroBracket> brackets;
    int uncertain_cells = 0;
    int untrusted_cells = 0;
};

// All adjacent grid pairs over [a, b] with certified opposite signs. Cells
// with |f| below the margin at an endpoint are re-scanned at step/4 (up to 3
// refinements) and demoted to uncertain if still ambiguous.
ScanResult sign_change_scan(const ScanFn& f, double a, double b, double step,
                            double margin);

// Bisection to width <= tol keeping both endpoint signs certified; returns
// nothing when sign agreement (numerical noise) demotes the bracket.
std::optional<ZeroBracket> refine_zero(const ScanFn& f, ZeroBracket bracket,
                                       double tol);

struct CountResult {
    std::size_t n0 = 0;
    std::vector<ZeroBracket> brackets;
    int uncertain_cells = 0;
    int untrusted_cells = 0;
    double margin = 0.0;
};

// Certified sign changes of Xi on (0, T), grid step min(h/8, 0.01).
CountResult count_zeros(const CompletedLContext& ctx, double T,
                        const SelbergParams& params);

struct CharacterReport {
    std::uint32_t j = 0;
    std::size_t n0 = 0;
    std::vector<ZeroBracket> brackets;
    std::size_t certificates = 0;
    std::size_t confirmed = 0;
    double mu_proxy = 0.0;
    std::size_t boxes_hit = 0;
    std::size_t boxes_with_zero = 0;  // hit boxes where B_k or B_{k+1} holds a bracket
    std::vector<std::string> warnings;
};

struct ZeroReport {
    std::uint64_t P = 0;
    double T = 0.0, X = 0.0, h = 0.0;
    std::size_t total_N0 = 0;
    double mu_E_total = 0.0;
    std::size_t box_count = 0;
    std::size_t total_boxes = 0;
    double ratio = 0.0;  // total_N0 / (T^2 P sqrt(log P))
    bool sound = true;   // every E certificate confirmed by a bracket
    bool box_implication_ok = true;
    std::vector<CharacterReport> per_character;
    std::vector<std::string> warnings;
};

struct ReportOptions {
    unsigned threads = 1;
    bool deterministic = false;
};

// Runs detect_E and count_zeros for every odd character, cross-validates
// each Selberg certificate against a certified bracket, and assembles the
// box-counting summary.
ZeroReport theorem_report(const CharacterTable& tbl, const SelbergParams& params,
                          const ReportOptions& opts = {});

}  // namespace mz
