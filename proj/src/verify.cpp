#include "massbound/verify.hpp"

#include <cmath>
#include <limits>

#include "massbound/bernoulli.hpp"
#include "massbound/grids.hpp"
#include "massbound/occupancy.hpp"
#include "massbound/rng.hpp"

namespace massbound {

namespace {

struct LhsRhs {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Checks every (p, t) pair; keeps the worst entry per p so reports stay
// serializable. Gaps are rhs - lhs throughout.
template <typename Fn>
GapReport scan_grid(std::string label, const std::vector<double>& p_grid,
                    const std::vector<double>& t_grid, double tolerance, GapCheck check, Fn&& fn) {
    GapReport report;
    report.label = std::move(label);
    report.tolerance = tolerance;
    report.check = check;
    report.min_gap = std::numeric_limits<double>::infinity();
    report.max_gap = -std::numeric_limits<double>::infinity();
    report.entries.reserve(p_grid.size());

    for (const double p : p_grid) {
        GapEntry worst;
        double worst_abs = -1.0;
        for (const double t : t_grid) {
            const LhsRhs v = fn(p, t);
            const double gap = v.rhs - v.lhs;
            GapEntry entry{p, t, v.lhs, v.rhs, gap};
            if (gap < report.min_gap) {
                report.min_gap = gap;
                report.argmin = entry;
            }
            report.max_gap = std::max(report.max_gap, gap);
            // worst per p: smallest gap for one-sided checks, largest |gap|
            // for equality checks
            const double badness = check == GapCheck::zero ? std::fabs(gap) : -gap;
            if (badness > worst_abs) {
                worst_abs = badness;
                worst = entry;
            }
            ++report.points_checked;
        }
        report.entries.push_back(worst);
    }

    report.pass = report.min_gap >= -tolerance &&
                  (check != GapCheck::zero || report.max_gap <= tolerance);
    return report;
}

void fold(SuiteResult& suite, GapReport report) {
    suite.pass = suite.pass && report.pass;
    suite.reports.push_back(std::move(report));
}

}  // namespace

SuiteResult verify_ks(const VerifyOptions& opt) {
    SuiteResult suite;
    suite.suite = "ks";
    const std::vector<double> p_grid = logit_grid(opt.p_points);
    const std::vector<double> t_grid = linspace(-opt.t_max, opt.t_max, opt.t_points);

    fold(suite, scan_grid("ks_gap", p_grid, t_grid, opt.tolerance, GapCheck::nonnegative,
                          [](double p, double t) {
                              return LhsRhs{centered_bernoulli_mgf_log(p, t),
                                            ks_coefficient(p) * t * t};
                          }));
    fold(suite, scan_grid("ks_equality_at_t_star", p_grid, {0.0}, opt.tolerance, GapCheck::zero,
                          [](double p, double) {
                              const double ts = t_star(p);
                              return LhsRhs{centered_bernoulli_mgf_log(p, ts),
                                            ks_coefficient(p) * ts * ts};
                          }));
    return suite;
}

SuiteResult verify_refine(const VerifyOptions& opt) {
    SuiteResult suite;
    suite.suite = "refine";
    std::vector<double> p_grid = logit_grid_upper((opt.p_points + 1) / 2);
    p_grid.push_back(1.0);  // the refined bound's domain is closed at p = 1
    const std::vector<double> t_grid = linspace(0.0, opt.t_max, (opt.t_points + 1) / 2);

    fold(suite, scan_grid("refined_gap", p_grid, t_grid, opt.tolerance, GapCheck::nonnegative,
                          [](double p, double t) {
                              return LhsRhs{centered_bernoulli_mgf_log(p, t),
                                            0.5 * p * (1.0 - p) * t * t};
                          }));
    fold(suite, scan_grid("refine_majorization", p_grid, {0.0}, 1e-12, GapCheck::nonnegative,
                          [](double p, double) {
                              return LhsRhs{0.5 * p * (1.0 - p), ks_coefficient(p)};
                          }));
    return suite;
}

SuiteResult verify_hs(const VerifyOptions& opt) {
    SuiteResult suite;
    suite.suite = "hs";
    const std::vector<double> p_grid = logit_grid(opt.p_points);
    const std::vector<double> s_grid = linspace(-opt.s_max, opt.s_max, opt.s_points);

    fold(suite, scan_grid("hs_nonnegative", p_grid, s_grid, opt.tolerance, GapCheck::nonnegative,
                          [](double p, double s) { return LhsRhs{0.0, h_s_value(p, s)}; }));
    fold(suite, scan_grid("hs_zero_at_half", {0.5}, s_grid, 1e-12, GapCheck::zero,
                          [](double p, double s) { return LhsRhs{h_s_value(p, s), 0.0}; }));
    fold(suite, scan_grid("hs_zero_at_s01", p_grid, {0.0, 1.0}, 1e-10, GapCheck::zero,
                          [](double p, double s) { return LhsRhs{h_s_value(p, s), 0.0}; }));

    // Closed-form second derivative vs central differences at random probes,
    // relative 1e-4. The absolute floor 2e-4 covers the step-1e-4 truncation
    // term h''''/12 * step^2 near the h'' = 0 manifold (p = 1/2 and s in
    // {0,1}), measured at <= 6.2e-5 over the sampled region, plus rounding.
    {
        GapReport fd;
        fd.label = "hs_second_derivative_fd";
        fd.tolerance = 0.0;
        fd.check = GapCheck::nonnegative;
        fd.min_gap = std::numeric_limits<double>::infinity();
        fd.max_gap = -std::numeric_limits<double>::infinity();
        RngStream rng(opt.fd_seed);
        constexpr double step = 1e-4;
        for (int i = 0; i < opt.hs_fd_points; ++i) {
            const double p = 0.02 + 0.96 * rng.uniform01();
            const double s = -3.0 + 6.0 * rng.uniform01();
            const double closed = h_s_second_derivative(p, s);
            const double diff = (h_s_value(p + step, s) - 2.0 * h_s_value(p, s) +
                                 h_s_value(p - step, s)) /
                                (step * step);
            const double allowed = std::max(1e-4 * std::max(std::fabs(closed), std::fabs(diff)), 2e-4);
            // lhs: observed discrepancy, rhs: allowance; gap >= 0 iff they agree
            const double discrepancy = std::fabs(closed - diff);
            GapEntry entry{p, s, discrepancy, allowed, allowed - discrepancy};
            if (entry.gap < fd.min_gap) {
                fd.min_gap = entry.gap;
                fd.argmin = entry;
            }
            fd.max_gap = std::max(fd.max_gap, entry.gap);
            if (closed < 0.0) fd.min_gap = -1.0;  // cannot happen: it is a square
            fd.entries.push_back(entry);
            ++fd.points_checked;
        }
        fd.pass = fd.min_gap >= 0.0;
        fold(suite, std::move(fd));
    }
    return suite;
}

SuiteResult verify_lamp(const VerifyOptions& opt, double c0) {
    SuiteResult suite;
    suite.suite = "lamp";
    const std::vector<double> p_grid = logit_grid(opt.p_points);
    for (const long long n : opt.n_list) {
        const std::vector<double> lambda_grid =
            linspace(0.0, 10.0 * static_cast<double>(n), opt.lambda_points);
        fold(suite, scan_grid("lamp_a n=" + std::to_string(n), p_grid, lambda_grid, opt.tolerance,
                              GapCheck::nonnegative, [n](double p, double lambda) {
                                  return LhsRhs{0.0, occupancy_mgf_gap_upper(n, p, lambda)};
                              }));
        fold(suite, scan_grid("lamp_b n=" + std::to_string(n), p_grid, lambda_grid, opt.tolerance,
                              GapCheck::nonnegative, [n, c0](double p, double lambda) {
                                  return LhsRhs{0.0, occupancy_mgf_gap_lower(n, p, lambda, c0)};
                              }));
    }
    return suite;
}

SuiteResult verify_internal(const VerifyOptions& opt, double c0) {
    SuiteResult suite;
    suite.suite = "internal";
    const std::vector<double> q_grid = logit_grid(opt.p_points);
    const std::vector<double> q_upper = logit_grid_upper((opt.p_points + 1) / 2);
    std::vector<double> q_lower = logit_grid_lower((opt.p_points + 1) / 2);
    q_lower.pop_back();  // the f >= 0 fact lives on the open interval (0, 1/2)

    fold(suite, scan_grid("internal_L_le_1", q_grid, {0.0}, opt.tolerance, GapCheck::nonnegative,
                          [](double q, double) { return LhsRhs{occupancy_fact_ratio(q), 1.0}; }));
    fold(suite, scan_grid("internal_R_ge_1", q_grid, {0.0}, opt.tolerance, GapCheck::nonnegative,
                          [](double p, double) { return LhsRhs{1.0, occupancy_fact_logfactor(p)}; }));

    // pairwise monotonicity of the (1/2,1) factor; entry t-column carries the
    // right neighbor
    {
        GapReport mono;
        mono.label = "internal_monotone_factor";
        mono.tolerance = 1e-12;
        mono.check = GapCheck::nonnegative;
        mono.min_gap = std::numeric_limits<double>::infinity();
        mono.max_gap = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i + 1 < q_upper.size(); ++i) {
            const double a = q_upper[i] == 0.5 ? 0.5 + 1e-13 : q_upper[i];
            const double b = q_upper[i + 1];
            const double ma = occupancy_fact_monotone(a);
            const double mb = occupancy_fact_monotone(b);
            GapEntry entry{q_upper[i], b, ma, mb, mb - ma};
            if (entry.gap < mono.min_gap) {
                mono.min_gap = entry.gap;
                mono.argmin = entry;
            }
            mono.max_gap = std::max(mono.max_gap, entry.gap);
            mono.entries.push_back(entry);
            ++mono.points_checked;
        }
        mono.pass = mono.min_gap >= -mono.tolerance;
        fold(suite, std::move(mono));
    }

    // the factor's limit at q -> 1/2+ is 2/log 2, so the product bound is
    // 8/log 2, which must exceed C0
    fold(suite, scan_grid("internal_limit_exceeds_c0", {0.5}, {0.0}, 0.0, GapCheck::nonnegative,
                          [c0](double, double) {
                              return LhsRhs{c0, 4.0 * (2.0 / std::log(2.0))};
                          }));

    fold(suite, scan_grid("internal_f_nonneg", q_lower, {0.0}, opt.tolerance, GapCheck::nonnegative,
                          [](double q, double) { return LhsRhs{0.0, occupancy_fact_gap(q)}; }));
    return suite;
}

SuiteResult verify_signs(const VerifyOptions& opt) {
    SuiteResult suite;
    suite.suite = "signs";

    // integer-indexed so the grid is exactly symmetric about 0
    std::vector<double> t_grid;
    const int steps = static_cast<int>(std::lround(opt.sign_t_max / opt.sign_t_step));
    for (int k = -steps; k <= steps; ++k) {
        const double t = k * opt.sign_t_step;
        if (std::fabs(t) >= opt.sign_t_hole) t_grid.push_back(t);
    }

    for (int i = 1; i <= opt.sign_p_points; ++i) {
        const double p = static_cast<double>(i) / (opt.sign_p_points + 1);
        SignScanReport report = scan_g_prime_signs(p, t_grid);
        suite.pass = suite.pass && report.violations.empty();
        suite.sign_reports.push_back(std::move(report));
    }
    return suite;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt, double c0) {
    std::vector<SuiteResult> suites;
    suites.push_back(verify_ks(opt));
    suites.push_back(verify_refine(opt));
    suites.push_back(verify_hs(opt));
    suites.push_back(verify_lamp(opt, c0));
    suites.push_back(verify_internal(opt, c0));
    suites.push_back(verify_signs(opt));
    return suites;
}

}  // namespace massbound
