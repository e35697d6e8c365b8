#include "massbound/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "massbound/checks.hpp"

namespace massbound {

using detail::log_sum_exp;

double centered_bernoulli_mgf_log(double p, double t) {
    detail::require_probability(p);
    detail::require_finite(t, "t");
    if (p == 0.0 || p == 1.0 || t == 0.0) return 0.0;  // f is identically 1 / f(0) = 1
    const double a = std::log1p(-p) - t * p;
    const double b = std::log(p) + t * (1.0 - p);
    return log_sum_exp(a, b);
}

double hoeffding_log_bound(double t, double a, double b) {
    detail::require_finite(t, "t");
    detail::require_finite(a, "a");
    detail::require_finite(b, "b");
    if (a > b) throw std::domain_error("hoeffding_log_bound requires a <= b");
    const double w = b - a;
    return w * w * t * t / 8.0;
}

double ks_coefficient(double p) {
    detail::require_probability(p);
    if (p == 0.0 || p == 1.0) return 0.0;
    const double u = p - 0.5;
    if (std::fabs(u) < 1e-4) {
        // second-order expansion; the closed form is 0/0 at p = 1/2
        return 0.125 - u * u / 6.0;
    }
    return (1.0 - 2.0 * p) / (4.0 * (std::log1p(-p) - std::log(p)));
}

double ks_gap(double p, double t) {
    return ks_coefficient(p) * t * t - centered_bernoulli_mgf_log(p, t);
}

double refined_gap(double p, double t) {
    detail::require_probability(p);
    detail::require_finite(t, "t");
    if (p < 0.5) throw std::domain_error("refined_gap holds for p in [1/2, 1] only");
    if (t < 0.0) throw std::domain_error("refined_gap holds for t >= 0 only");
    return 0.5 * p * (1.0 - p) * t * t - centered_bernoulli_mgf_log(p, t);
}

double g_exponent(double p, double t) {
    detail::require_open_probability(p);
    detail::require_finite(t, "t");
    if (std::fabs(t) < 1e-5) {
        // cumulant expansion of log f(t)/t^2; direct evaluation is 0/0-like
        const double k2 = p * (1.0 - p);
        const double k3 = k2 * (1.0 - 2.0 * p);
        return 0.5 * k2 + k3 * t / 6.0;
    }
    return centered_bernoulli_mgf_log(p, t) / (t * t);
}

double t_star(double p) {
    detail::require_open_probability(p);
    return 2.0 * (std::log1p(-p) - std::log(p));
}

double h_s_value(double p, double s) {
    detail::require_open_probability(p);
    detail::require_finite(s, "s");
    if (s == 0.0) return 0.0;  // both terms vanish identically
    const double L = std::log1p(-p) - std::log(p);  // log((1-p)/p)
    const double quad = s * (s + 2.0 * p * (1.0 - s)) * L;
    // log(1 - p + p ((1-p)/p)^{2s}) without forming the power
    const double mix = log_sum_exp(std::log1p(-p), std::log(p) + 2.0 * s * L);
    return quad - mix;
}

double h_s_second_derivative(double p, double s) {
    detail::require_open_probability(p);
    detail::require_finite(s, "s");
    const double L = std::log1p(-p) - std::log(p);
    const double log_mu = 2.0 * s * L;
    double ratio;
    if (log_mu > 700.0) {
        // mu overflows; ratio of the mu-dominant terms
        ratio = (p - 1.0 + s) / (p * (1.0 - p));
    } else if (log_mu < -700.0) {
        // mu underflows to 0
        ratio = (p - s) / (p * (1.0 - p));
    } else {
        const double mu = std::exp(log_mu);
        const double num = (mu - 1.0) * p * p - s + p * (1.0 - mu + s + mu * s);
        const double den = p * (1.0 - p) * (1.0 + (mu - 1.0) * p);
        if (!(den > 0.0)) {
            throw std::logic_error("h_s_second_derivative: denominator 1-p+p*mu not positive");
        }
        ratio = num / den;
    }
    return ratio * ratio;
}

SignScanReport scan_g_prime_signs(double p, const std::vector<double>& t_grid) {
    detail::require_open_probability(p);
    if (t_grid.size() < 2) throw std::invalid_argument("scan_g_prime_signs needs at least 2 grid points");
    for (size_t i = 0; i < t_grid.size(); ++i) {
        detail::require_finite(t_grid[i], "t_grid");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("scan_g_prime_signs requires a strictly increasing grid");
        }
        if (std::fabs(t_grid[i]) < 0.01) {
            throw std::invalid_argument(
                "scan_g_prime_signs grid must exclude |t| < 0.01 (finite differences on g are "
                "rounding-noise dominated there)");
        }
    }

    constexpr double kStep = 1e-4;      // central-difference step
    constexpr double kZeroTol = 1e-7;   // |g'| below this classifies as 0

    SignScanReport report;
    report.p = p;
    report.t_grid = t_grid;
    report.t_star = t_star(p);
    report.g_at_t_star =
        std::fabs(report.t_star) < 1e-5 ? g_exponent(p, 0.0) : g_exponent(p, report.t_star);

    // Size the zone around t* where a zero classification is legitimate from
    // the local curvature: |g'| <= kZeroTol within roughly kZeroTol/|g''(t*)|.
    double curvature = 0.0;
    if (std::fabs(report.t_star) >= 0.02) {
        const double h2 = 1e-3;
        curvature = (g_exponent(p, report.t_star + h2) - 2.0 * report.g_at_t_star +
                     g_exponent(p, report.t_star - h2)) /
                    (h2 * h2);
    }
    report.zero_zone = std::fabs(curvature) > 1e-12
                           ? std::max(8.0 * kZeroTol / std::fabs(curvature), 4.0 * kStep)
                           : 0.1;

    report.derivative_signs.reserve(t_grid.size());
    for (const double t : t_grid) {
        const double gp = (g_exponent(p, t + kStep) - g_exponent(p, t - kStep)) / (2.0 * kStep);
        DerivativeSign sign = DerivativeSign::zero;
        if (gp > kZeroTol) sign = DerivativeSign::positive;
        else if (gp < -kZeroTol) sign = DerivativeSign::negative;
        report.derivative_signs.push_back(sign);

        const double offset = t - report.t_star;
        bool violation = false;
        switch (sign) {
            case DerivativeSign::positive: violation = offset > report.zero_zone; break;
            case DerivativeSign::negative: violation = offset < -report.zero_zone; break;
            case DerivativeSign::zero: violation = std::fabs(offset) > report.zero_zone; break;
        }
        if (violation) report.violations.push_back({t, gp});
    }
    return report;
}

}  // namespace massbound
