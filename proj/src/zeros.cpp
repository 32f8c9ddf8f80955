#include "mz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace mz {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

void scan_cell(const ScanFn& f, double u0, double u1,
               std::optional<double> v0, std::optional<double> v1, double margin,
               int depth, ScanResult& out) {
    if (!v0 || !v1) {
        ++out.untrusted_cells;
        return;
    }
    const bool certified0 = std::abs(*v0) >= margin;
    const bool certified1 = std::abs(*v1) >= margin;
    if (certified0 && certified1) {
        if (sign_of(*v0) != sign_of(*v1))
            out.brackets.push_back({u0, u1, *v0, *v1, true});
        return;
    }
    if (depth >= 3) {
        ++out.uncertain_cells;
        return;
    }
    // re-scan the cell at a quarter of the step
    const double step = (u1 - u0) / 4.0;
    std::optional<double> prev = v0;
    double up = u0;
    for (int i = 1; i <= 4; ++i) {
        const double un = (i == 4) ? u1 : u0 + step * i;
        const std::optional<double> vn = (i == 4) ? v1 : f(un);
        scan_cell(f, up, un, prev, vn, margin, depth + 1, out);
        up = un;
        prev = vn;
    }
}

}  // namespace

ScanResult sign_change_scan(const ScanFn& f, double a, double b, double step,
                            double margin) {
    if (!(a < b)) throw std::invalid_argument("sign_change_scan: requires a < b");
    if (!(step > 0.0)) throw std::invalid_argument("sign_change_scan: requires step > 0");
    ScanResult out;
    std::optional<double> prev = f(a);
    double up = a;
    while (up < b) {
        const double un = std::min(up + step, b);
        const std::optional<double> vn = f(un);
        scan_cell(f, up, un, prev, vn, margin, 0, out);
        up = un;
        prev = vn;
    }
    return out;
}

std::optional<ZeroBracket> refine_zero(const ScanFn& f, ZeroBracket bracket,
                                       double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("refine_zero: requires tol > 0");
    if (sign_of(bracket.f_lo) == sign_of(bracket.f_hi) || sign_of(bracket.f_lo) == 0)
        return std::nullopt;
    while (bracket.hi - bracket.lo > tol) {
        const double mid = 0.5 * (bracket.lo + bracket.hi);
        if (mid <= bracket.lo || mid >= bracket.hi) break;  // double resolution floor
        const std::optional<double> fm = f(mid);
        if (!fm) return std::nullopt;
        const int sm = sign_of(*fm);
        if (sm == 0) {
            // exact zero hit: shrink both sides around it within tolerance
            bracket.lo = mid - 0.25 * tol;
            bracket.hi = mid + 0.25 * tol;
            bracket.f_lo = f(bracket.lo).value_or(0.0);
            bracket.f_hi = f(bracket.hi).value_or(0.0);
            if (sign_of(bracket.f_lo) * sign_of(bracket.f_hi) >= 0) return std::nullopt;
            break;
        }
        if (sm == sign_of(bracket.f_lo)) {
            bracket.lo = mid;
            bracket.f_lo = *fm;
        } else if (sm == sign_of(bracket.f_hi)) {
            bracket.hi = mid;
            bracket.f_hi = *fm;
        } else {
            return std::nullopt;  // numerical noise: demote
        }
    }
    return bracket;
}

namespace {

double certification_margin(const CompletedLContext& ctx) {
    return 1e3 * ctx.scale() * std::max(ctx.fit_residual(), 1e-13);
}

ScanFn xi_scan_fn(const CompletedLContext& ctx) {
    return [&ctx](double t) -> std::optional<double> {
        const BigXiEval e = ctx.big_xi(t);
        if (!e.trusted) return std::nullopt;
        return e.value;
    };
}

ScanFn f_scan_fn(const CompletedLContext& ctx, const MollifierCoeffs& coeffs) {
    return [&ctx, &coeffs](double t) -> std::optional<double> {
        const BigXiEval e = ctx.f_big(&coeffs, t);
        if (!e.trusted) return std::nullopt;
        return e.value;
    };
}

}  // namespace

CountResult count_zeros(const CompletedLContext& ctx, double T,
                        const SelbergParams& params) {
    if (!(T > 0.0 && T <= 1.0))
        throw std::invalid_argument("count_zeros: T must lie in (0, 1]");
    CountResult out;
    out.margin = certification_margin(ctx);
    const double step = std::min(params.h / 8.0, 0.01);
    const ScanFn f = xi_scan_fn(ctx);
    ScanResult scan = sign_change_scan(f, 0.0, T, step, out.margin);
    out.uncertain_cells = scan.uncertain_cells;
    out.untrusted_cells = scan.untrusted_cells;
    for (const ZeroBracket& b : scan.brackets) {
        auto refined = refine_zero(f, b, params.refine_tol);
        if (refined) {
            out.brackets.push_back(*refined);
        } else {
            ++out.uncertain_cells;
        }
    }
    out.n0 = out.brackets.size();
    return out;
}

namespace {

CharacterReport report_for_character(const CharacterTable& tbl,
                                     const MollifierCoeffs& coeffs,
                                     const SelbergParams& params, std::uint32_t j) {
    CharacterReport rep;
    rep.j = j;
    const CompletedLContext ctx(tbl, j);
    if (!ctx.root_number_consistent())
        rep.warnings.push_back("character " + std::to_string(j) +
                               ": c(chi)^2 disagrees with the Gauss-sum root number");

    const CountResult counted = count_zeros(ctx, params.T, params);
    rep.n0 = counted.n0;
    rep.brackets = counted.brackets;
    if (counted.untrusted_cells > 0)
        rep.warnings.push_back("character " + std::to_string(j) + ": " +
                               std::to_string(counted.untrusted_cells) +
                               " grid cells excluded as untrusted");
    if (counted.uncertain_cells > 0)
        rep.warnings.push_back("character " + std::to_string(j) + ": " +
                               std::to_string(counted.uncertain_cells) +
                               " grid cells left uncertain");

    // audit scan of F over (-h, T+h): confirms Selberg certificates and
    // feeds the box implication check
    const double step = std::min(params.h / 8.0, 0.01);
    const double margin = counted.margin;
    const ScanFn f = f_scan_fn(ctx, coeffs);
    ScanResult audit = sign_change_scan(f, -params.h - step, params.T + params.h + step,
                                        step, margin);

    auto bracket_inside = [&audit](double lo, double hi) {
        return std::any_of(audit.brackets.begin(), audit.brackets.end(),
                           [&](const ZeroBracket& b) { return b.lo >= lo && b.hi <= hi; });
    };

    const DetectionResult det = detect_E(ctx, coeffs, params);
    rep.certificates = det.certificates.size();
    rep.mu_proxy = det.mu_proxy;
    if (det.flagged_intervals > 0)
        rep.warnings.push_back("character " + std::to_string(j) + ": " +
                               std::to_string(det.flagged_intervals) +
                               " detection intervals flagged untrusted");
    for (const ECertificate& cert : det.certificates) {
        bool ok = bracket_inside(cert.t, cert.t + params.h);
        if (!ok) {
            // the audit grid may straddle the window; rescan it directly
            ScanResult local = sign_change_scan(f, cert.t, cert.t + params.h,
                                                params.h / 64.0, margin);
            ok = !local.brackets.empty();
            for (const ZeroBracket& b : local.brackets) audit.brackets.push_back(b);
        }
        if (ok) ++rep.confirmed;
    }

    // B_k = (kh, (k+1)h): count boxes meeting E and check the implication
    // that B_k or B_{k+1} then contains a sign change.
    const auto K = static_cast<std::int64_t>(std::floor(params.T / params.h));
    for (std::int64_t k = -1; k <= K - 1; ++k) {
        const double lo = static_cast<double>(k) * params.h;
        const double hi = lo + params.h;
        const bool hit = std::any_of(det.certificates.begin(), det.certificates.end(),
                                     [&](const ECertificate& c) {
                                         return c.t > lo && c.t < hi;
                                     });
        if (!hit) continue;
        ++rep.boxes_hit;
        if (bracket_inside(lo, hi + params.h)) ++rep.boxes_with_zero;
    }
    return rep;
}

}  // namespace

ZeroReport theorem_report(const CharacterTable& tbl, const SelbergParams& params,
                          const ReportOptions& opts) {
    ZeroReport report;
    report.P = tbl.modulus();
    report.T = params.T;
    report.X = params.X;
    report.h = params.h;

    const MollifierCoeffs coeffs = beta_coeffs(params.X);
    const std::vector<std::uint32_t> odd = odd_character_indices(tbl);
    report.per_character.resize(odd.size());

    const unsigned threads =
        opts.deterministic ? 1 : std::max(1u, opts.threads);
    if (threads <= 1) {
        for (std::size_t i = 0; i < odd.size(); ++i)
            report.per_character[i] = report_for_character(tbl, coeffs, params, odd[i]);
    } else {
        std::vector<std::thread> pool;
        const unsigned k = static_cast<unsigned>(std::min<std::size_t>(threads, odd.size()));
        for (unsigned w = 0; w < k; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < odd.size(); i += k)
                    report.per_character[i] =
                        report_for_character(tbl, coeffs, params, odd[i]);
            });
        }
        for (auto& t : pool) t.join();
    }

    const auto K = static_cast<std::size_t>(std::floor(params.T / params.h)) + 1;
    report.total_boxes = K * report.per_character.size();
    for (const CharacterReport& rep : report.per_character) {
        report.total_N0 += rep.n0;
        report.mu_E_total += rep.mu_proxy;
        report.box_count += rep.boxes_hit;
        if (rep.confirmed != rep.certificates) report.sound = false;
        if (rep.boxes_with_zero != rep.boxes_hit) report.box_implication_ok = false;
        for (const std::string& w : rep.warnings) report.warnings.push_back(w);
    }
    const double Pd = static_cast<double>(report.P);
    report.ratio = static_cast<double>(report.total_N0) /
                   (params.T * params.T * Pd * std::sqrt(std::log(Pd)));
    if (!report.sound)
        report.warnings.push_back("soundness failure: an E certificate was not confirmed "
                                  "by any certified sign-change bracket");
    return report;
}

}  // namespace mz
