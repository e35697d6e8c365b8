#include "massbound/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "massbound/checks.hpp"

namespace massbound {

using detail::log_sum_exp;

double survival_prob(double p, long long n) {
    detail::require_probability(p);
    detail::require_sample_size(n);
    if (p == 0.0) return 1.0;
    if (p == 1.0) return 0.0;
    return std::exp(static_cast<double>(n) * std::log1p(-p));
}

namespace {

void check_occupancy_args(long long n, double p, double lambda) {
    detail::require_sample_size(n);
    detail::require_probability(p);
    detail::require_nonnegative(lambda, "lambda");  // the bounds cover lambda >= 0 only
}

// log[ q e^{x_q} + (1-q) e^{x_1q} ], tolerating q in {0, 1}
double log_two_point_mgf(double q, double x_q, double x_1q) {
    const double a = q > 0.0 ? std::log(q) + x_q : -std::numeric_limits<double>::infinity();
    const double b = q < 1.0 ? std::log1p(-q) + x_1q : -std::numeric_limits<double>::infinity();
    return log_sum_exp(a, b);
}

}  // namespace

double occupancy_mgf_gap_upper(long long n, double p, double lambda) {
    check_occupancy_args(n, p, lambda);
    if (lambda == 0.0) return 0.0;  // both sides are exactly 1
    const double q = survival_prob(p, n);
    const double lhs = log_two_point_mgf(q, lambda * p * (1.0 - q), -lambda * p * q);
    return p * lambda * lambda / (4.0 * static_cast<double>(n)) - lhs;
}

double occupancy_mgf_gap_lower(long long n, double p, double lambda, double c0) {
    check_occupancy_args(n, p, lambda);
    detail::require_positive(c0, "c0");
    if (lambda == 0.0) return 0.0;
    const double q = survival_prob(p, n);
    const double lhs = log_two_point_mgf(q, lambda * p * (q - 1.0), lambda * p * q);
    return p * lambda * lambda / (c0 * static_cast<double>(n)) - lhs;
}

namespace {

void check_tail_args(long long n, double epsilon) {
    detail::require_sample_size(n);
    detail::require_positive(epsilon, "epsilon");
}

}  // namespace

TailBound upper_tail_bound(long long n, double epsilon) {
    check_tail_args(n, epsilon);
    TailBound b;
    b.n = n;
    b.epsilon = epsilon;
    b.lambda_upper = 2.0 * static_cast<double>(n) * epsilon;
    const double exponent = -static_cast<double>(n) * epsilon * epsilon;
    // the optimized Chernoff exponent must reproduce -n eps^2
    const double chernoff =
        b.lambda_upper * b.lambda_upper / (4.0 * static_cast<double>(n)) - b.lambda_upper * epsilon;
    if (std::fabs(chernoff - exponent) > 1e-9 * std::max(1.0, std::fabs(exponent))) {
        throw std::logic_error("upper_tail_bound: Chernoff exponent mismatch");
    }
    b.upper = std::exp(exponent);
    return b;
}

TailBound lower_tail_bound(long long n, double epsilon, double c0) {
    check_tail_args(n, epsilon);
    detail::require_positive(c0, "c0");
    TailBound b;
    b.n = n;
    b.epsilon = epsilon;
    b.lambda_lower = c0 * static_cast<double>(n) * epsilon / 2.0;
    b.lower = std::exp(-c0 * static_cast<double>(n) * epsilon * epsilon / 4.0);
    b.legacy_lower = std::exp(-(std::exp(1.0) / 2.0) * static_cast<double>(n) * epsilon * epsilon);
    return b;
}

TailBound tail_bound(long long n, double epsilon, double c0) {
    TailBound b = upper_tail_bound(n, epsilon);
    const TailBound lo = lower_tail_bound(n, epsilon, c0);
    b.lower = lo.lower;
    b.legacy_lower = lo.legacy_lower;
    b.lambda_lower = lo.lambda_lower;
    return b;
}

double occupancy_fact_ratio(double q) {
    detail::require_open_probability(q, "q");
    const double u = q - 0.5;
    if (std::fabs(u) < 1e-7) return 0.5 * std::log(2.0);  // 0/0 limit at q = 1/2
    return (1.0 - 2.0 * q) * (-std::log(q)) / (std::log1p(-q) - std::log(q));
}

double occupancy_fact_logfactor(double p) {
    detail::require_open_probability(p);
    return -std::log1p(-p) / p;
}

double occupancy_fact_monotone(double q) {
    detail::require_open_probability(q, "q");
    if (!(q > 0.5)) throw std::domain_error("occupancy_fact_monotone is defined on (1/2, 1)");
    const double u = q - 0.5;
    if (u < 1e-12) return 2.0 / std::log(2.0);
    // log(q/(1-q)) = 2 atanh(2u); the atanh form keeps relative precision
    // as q -> 1/2 where numerator and denominator both vanish
    return 2.0 * std::atanh(2.0 * u) / (2.0 * u * (-std::log(q)));
}

double occupancy_fact_gap(double q) {
    detail::require_open_probability(q, "q");
    if (!(q < 0.5)) throw std::domain_error("occupancy_fact_gap is defined on (0, 1/2)");
    return (std::log1p(-q) - std::log(q)) - (1.0 - 2.0 * q) * (-std::log(q));
}

}  // namespace massbound
