// The analytic identity suite: every cross-route check the library exposes,
// packaged as named pass/fail records with measured residuals.
#pragma once

#include <string>
#include <vector>

namespace mz {

struct IdentityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // relative unless the name says otherwise
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

struct VerifyOptions {
    unsigned threads = 1;
    std::string only;  // substring filter on check names; empty runs all
};

std::vector<IdentityCheck> run_identity_suite(const VerifyOptions& opts = {});

// Helper kept separately callable so tests can probe mutation sensitivity:
// max_n |(alpha * alpha)_n - mu(n)| over n <= N for caller-supplied alphas.
double alpha_convolution_max_residual(const std::vector<double>& alpha,
                                      std::size_t N);

}  // namespace mz
