// mzeros: verification suites, S(theta) scans, kernel tables, and certified
// zero-count reports for the mollified low-lying-zero machinery.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mz/characters.hpp"
#include "mz/report.hpp"
#include "mz/selberg.hpp"
#include "mz/stheta.hpp"
#include "mz/verify.hpp"
#include "mz/zeros.hpp"

namespace {

struct CommonOpts {
    unsigned threads = 0;  // 0: resolve from env or default 1
    bool deterministic = false;
    bool force = false;
    std::string out;
    std::string format = "json";
};

unsigned resolve_threads(const CommonOpts& o) {
    if (o.deterministic) return 1;
    if (o.threads > 0) return o.threads;
    if (const char* env = std::getenv("MOLLIFIED_ZEROS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--threads", o.threads,
                    "worker count (env MOLLIFIED_ZEROS_THREADS is the fallback)");
    cmd->add_flag("--deterministic", o.deterministic,
                  "single-threaded, byte-stable output");
    cmd->add_option("--out", o.out, "output file path (default: stdout)");
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

mz::ojson base_config(const std::string& command, const CommonOpts& o) {
    mz::ojson cfg;
    cfg["command"] = command;
    cfg["threads"] = resolve_threads(o);
    cfg["deterministic"] = o.deterministic;
    cfg["format"] = o.format;
    if (o.force) cfg["uncapped"] = true;
    return cfg;
}

void emit(const CommonOpts& o, const std::string& content) {
    if (o.out.empty())
        std::fputs(content.c_str(), stdout);
    else
        mz::write_text_file(o.out, content);
}

int run_verify(const CommonOpts& o, const std::string& only) {
    mz::VerifyOptions vo;
    vo.threads = resolve_threads(o);
    vo.only = only;
    const auto checks = mz::run_identity_suite(vo);
    if (checks.empty()) {
        std::fprintf(stderr, "no identity check matches --only '%s'\n", only.c_str());
        return 1;
    }
    std::printf("%-24s %12s %12s %7s %8s\n", "check", "residual", "tolerance", "pass",
                "seconds");
    bool all_pass = true;
    for (const auto& c : checks) {
        std::printf("%-24s %12.3e %12.3e %7s %8.2f\n", c.name.c_str(), c.residual,
                    c.tolerance, c.pass ? "PASS" : "FAIL", c.seconds);
        if (!c.note.empty()) std::printf("    %s\n", c.note.c_str());
        all_pass = all_pass && c.pass;
    }
    if (!o.out.empty()) {
        mz::ojson cfg = base_config("verify", o);
        if (!only.empty()) cfg["only"] = only;
        if (o.format == "csv")
            mz::write_text_file(o.out, mz::identity_checks_csv(checks));
        else
            mz::write_text_file(o.out, mz::identity_checks_json(checks, cfg).dump(2) + "\n");
    }
    if (!all_pass) {
        for (const auto& c : checks)
            if (!c.pass) std::fprintf(stderr, "FAILED: %s\n", c.name.c_str());
        return 2;
    }
    return 0;
}

int run_stheta(const CommonOpts& o, std::vector<double> xs, std::vector<double> thetas) {
    if (xs.empty()) xs = {16.0, 32.0, 64.0, 128.0};
    if (thetas.empty()) thetas = {0.0, 1.0 / 32, 1.0 / 16, 3.0 / 32, 1.0 / 8};
    mz::SThetaOptions so;
    so.threads = resolve_threads(o);
    so.deterministic = o.deterministic;
    so.force_cap = o.force;
    const auto rows = mz::s_theta_scan(xs, thetas, so);
    emit(o, mz::stheta_scan_csv(rows));

    // boundedness verdict: normalized(X) against normalized(smallest X)
    bool bounded = true;
    for (double theta : thetas) {
        double base = 0.0;
        for (const auto& r : rows) {
            if (r.theta != theta) continue;
            if (r.X == xs.front()) base = r.normalized;
            else if (base > 0.0 && r.normalized > 1.5 * base) bounded = false;
        }
    }
    std::fprintf(stderr, "boundedness verdict: %s (normalized(X) <= 1.5 x normalized(%g))\n",
                 bounded ? "BOUNDED" : "UNBOUNDED", xs.front());
    return 0;
}

int run_zeros(const CommonOpts& o, std::uint64_t P, double T, double X, double c1,
              double c2, double h, double grid, int character) {
    const mz::CharacterTable tbl(P, o.force);
    const auto params = mz::SelbergParams::make(P, T, X, c1, c2, h, grid);
    std::vector<std::uint32_t> js;
    if (character >= 0)
        js.push_back(static_cast<std::uint32_t>(character));
    else
        js = mz::odd_character_indices(tbl);

    mz::ojson cfg = base_config("zeros", o);
    cfg["P"] = P;
    cfg["T"] = params.T;
    cfg["X"] = params.X;
    cfg["h"] = params.h;
    std::string csv = "P,T,j,zero_lo,zero_hi\n";
    mz::ojson arr = mz::ojson::array();
    std::size_t total = 0;
    for (std::uint32_t j : js) {
        const mz::CompletedLContext ctx(tbl, j);
        const auto counted = mz::count_zeros(ctx, params.T, params);
        total += counted.n0;
        std::printf("j=%-6u N0=%zu\n", j, counted.n0);
        mz::ojson rec;
        rec["j"] = j;
        rec["N0"] = counted.n0;
        mz::ojson zs = mz::ojson::array();
        for (const auto& b : counted.brackets) {
            mz::ojson z;
            z["lo"] = b.lo;
            z["hi"] = b.hi;
            zs.push_back(z);
            csv += std::to_string(P) + "," + std::to_string(params.T) + "," +
                   std::to_string(j) + "," + std::to_string(b.lo) + "," +
                   std::to_string(b.hi) + "\n";
        }
        rec["zeros"] = zs;
        arr.push_back(rec);
    }
    std::printf("total N0 = %zu\n", total);
    if (!o.out.empty()) {
        if (o.format == "csv") {
            mz::write_text_file(o.out, csv);
        } else {
            mz::ojson out;
            out["schema_version"] = mz::kSchemaVersion;
            out["config"] = cfg;
            out["per_character"] = arr;
            out["total_N0"] = total;
            mz::write_text_file(o.out, out.dump(2) + "\n");
        }
    }
    return 0;
}

int run_report(const CommonOpts& o, std::uint64_t P, double T, double X, double c1,
               double c2, double h, double grid) {
    const mz::CharacterTable tbl(P, o.force);
    const auto params = mz::SelbergParams::make(P, T, X, c1, c2, h, grid);
    mz::ReportOptions ro;
    ro.threads = resolve_threads(o);
    ro.deterministic = o.deterministic;
    const mz::ZeroReport report = mz::theorem_report(tbl, params, ro);

    mz::ojson cfg = base_config("report", o);
    cfg["P"] = P;
    cfg["T"] = params.T;
    cfg["X"] = params.X;
    cfg["h"] = params.h;
    cfg["c1"] = params.c1;
    cfg["c2"] = params.c2;
    cfg["grid_step"] = params.grid_step;

    if (o.format == "csv")
        emit(o, mz::zero_report_csv(report));
    else
        emit(o, mz::zero_report_json(report, cfg).dump(2) + "\n");

    std::fprintf(stderr, "P=%llu T=%g total_N0=%zu ratio=%.6g mu_E=%.6g sound=%s\n",
                 static_cast<unsigned long long>(P), params.T, report.total_N0,
                 report.ratio, report.mu_E_total, report.sound ? "yes" : "NO");
    for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    return report.sound ? 0 : 2;
}

int run_kernels(const CommonOpts& o, double theta) {
    std::string csv = "quantity,arg1,arg2,value_re,value_im\n";
    auto add = [&](const std::string& q, double a1, double a2, mz::cplx v) {
        csv += q + "," + std::to_string(a1) + "," + std::to_string(a2) + "," +
               std::to_string(v.real()) + "," + std::to_string(v.imag()) + "\n";
    };
    add("K", theta, 0.0, mz::k_theta(theta));
    for (double y : {0.05, 0.1, 0.2, 1.0, 2.0}) add("varpi", y, 0.0, mz::varpi(y));
    for (double s : {0.0, 1.0, 2.0, 4.0})
        add("V", s, theta, mz::kernel_V({s, 0.0}, theta));
    add("Hstar_quadrature", 1.0, 1.0, mz::kernel_Hstar({1.0, 0.0}, {1.0, 0.0}, theta));
    add("Hstar_closed", 1.0, 1.0, mz::kernel_Hstar_closed({1.0, 0.0}, {1.0, 0.0}, theta));
    add("H", 1.0, 1.0, mz::kernel_H({1.0, 0.0}, {1.0, 0.0}, theta));
    emit(o, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mollified-zeros: mollifier, kernel, and certified zero-count toolkit"};
    app.require_subcommand(1);

    CommonOpts overify, ostheta, ozeros, oreport, okernels;
    std::string only;
    std::vector<double> xs, thetas;
    std::uint64_t P = 101;
    double T = 1.0, X = 0.0, c1 = 1.0, c2 = 1.0, h = 0.0, grid = 0.0, ktheta = 0.125;
    int character = -1;

    auto* verify = app.add_subcommand("verify", "run the analytic identity suite");
    add_common(verify, overify);
    verify->add_option("--only", only, "run only checks whose name contains this substring");

    auto* stheta = app.add_subcommand("stheta", "scan S(theta) over X and theta grids");
    add_common(stheta, ostheta);
    stheta->add_flag("--force", ostheta.force, "lift the X <= 512 cost cap (watermarked)");
    stheta->add_option("--xs", xs, "cutoff values X (default 16 32 64 128)");
    stheta->add_option("--thetas", thetas, "theta values (default 0 1/32 1/16 3/32 1/8)");

    auto add_run_opts = [&](CLI::App* cmd, CommonOpts& oc) {
        add_common(cmd, oc);
        cmd->add_flag("--force", oc.force, "lift the P <= 10^6 policy cap (watermarked)");
        cmd->add_option("--modulus", P, "odd prime modulus P")->required();
        cmd->add_option("--height", T, "count zeros up to height T in (0, 1]");
        cmd->add_option("--cutoff-x", X, "mollifier cutoff X (default P^{1/16})");
        cmd->add_option("--c1", c1, "parameter c1");
        cmd->add_option("--c2", c2, "parameter c2 in h = c2/(T sqrt(log P))");
        cmd->add_option("--window-h", h, "override the window length h");
        cmd->add_option("--grid-step", grid, "detection grid step (<= h/8)");
    };

    auto* zeros = app.add_subcommand("zeros", "certified sign-change zero counts");
    add_run_opts(zeros, ozeros);
    zeros->add_option("--character", character, "single character index (default: all odd)");

    auto* report = app.add_subcommand("report", "full detection + zero-count report");
    add_run_opts(report, oreport);

    auto* kernels = app.add_subcommand("kernels", "tabulate V, H*, H, K, varpi");
    add_common(kernels, okernels);
    kernels->add_option("--theta", ktheta, "theta for the kernel table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return run_verify(overify, only);
        if (stheta->parsed()) return run_stheta(ostheta, xs, thetas);
        if (zeros->parsed())
            return run_zeros(ozeros, P, T, X, c1, c2, h, grid, character);
        if (report->parsed()) return run_report(oreport, P, T, X, c1, c2, h, grid);
        if (kernels->parsed()) return run_kernels(okernels, ktheta);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
