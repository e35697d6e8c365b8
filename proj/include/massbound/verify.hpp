#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "massbound/report.hpp"

namespace massbound {

// Grid sizes and tolerances for the verification suites. The defaults are
// the documented ones: p on a mirrored logit grid (dense near the endpoints,
// where the Kearns-Saul coefficient collapses), t wide enough to stress the
// exponent factoring, all inequality checks in log domain with absolute
// tolerance 1e-9.
struct VerifyOptions {
    double tolerance = 1e-9;
    int p_points = 2001;       // logit grid over [1e-6, 1-1e-6]
    int t_points = 1201;       // linear over [-60, 60]
    double t_max = 60.0;
    int s_points = 801;        // linear over [-10, 10] for the h_s suite
    double s_max = 10.0;
    int lambda_points = 400;   // linear over [0, 10n] per sample size
    std::vector<long long> n_list = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    int hs_fd_points = 1000;   // random (p,s) probes for the h_s'' cross-check
    std::uint64_t fd_seed = 0x68735f6664ULL;
    // sign scan: p in {0.01, ..., 0.99}, t over [-10, 10] step 0.01 with a
    // punctured neighborhood of 0 where g is series-defined
    int sign_p_points = 99;
    double sign_t_max = 10.0;
    double sign_t_step = 0.01;
    double sign_t_hole = 0.05;
};

struct SuiteResult {
    std::string suite;
    std::vector<GapReport> reports;
    std::vector<SignScanReport> sign_reports;  // populated by the signs suite only
    bool pass = true;
};

// Kearns-Saul inequality over the (p, t) grid, plus equality at t*(p).
SuiteResult verify_ks(const VerifyOptions& opt);

// The p >= 1/2, t >= 0 refinement, plus the majorization
// p(1-p)/2 <= c(p) on [1/2, 1].
SuiteResult verify_refine(const VerifyOptions& opt);

// h_s >= 0 on the (p, s) grid; h_s(1/2, s) = 0; h_s(p, 0) = h_s(p, 1) = 0;
// closed-form h_s'' against central finite differences at random probes.
SuiteResult verify_hs(const VerifyOptions& opt);

// Occupancy MGF bounds (parts a and b) over the (n, p, lambda) grids.
SuiteResult verify_lamp(const VerifyOptions& opt, double c0);

// The four auxiliary facts behind the occupancy MGF bounds, each on its own
// grid, plus the 8/log2 > C0 comparison.
SuiteResult verify_internal(const VerifyOptions& opt, double c0);

// Numerical sign scan of g' for each p: evidence for the conjectured +/0/-
// pattern around t*. Not probative.
SuiteResult verify_signs(const VerifyOptions& opt);

// All of the above, in a fixed order.
std::vector<SuiteResult> verify_all(const VerifyOptions& opt, double c0);

}  // namespace massbound
