#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

// Test-side oracles, independent of the library code paths they check.

namespace testutil {

// direct two-term evaluation of log[(1-p)e^{-tp} + p e^{t(1-p)}]; oracle for
// moderate |t| where nothing overflows
inline double naive_logf(double p, double t) {
    return std::log((1.0 - p) * std::exp(-t * p) + p * std::exp(t * (1.0 - p)));
}

// golden-section minimizer over [lo, hi] for unimodal fn; test-side oracle
// for Chernoff lambda optimality
template <typename Fn>
double golden_min(Fn&& fn, double lo, double hi, double tol = 1e-10) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - invphi * (hi - lo);
    double b = lo + invphi * (hi - lo);
    double fa = fn(a), fb = fn(b);
    while (hi - lo > tol) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - invphi * (hi - lo);
            fa = fn(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + invphi * (hi - lo);
            fb = fn(b);
        }
    }
    return 0.5 * (lo + hi);
}

// log of the binomial pmf, for the exact-binomial consistency bands
inline double log_binom_pmf(std::int64_t n, std::int64_t k, double p) {
    if (p <= 0.0) return k == 0 ? 0.0 : -INFINITY;
    if (p >= 1.0) return k == n ? 0.0 : -INFINITY;
    return std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) -
           std::lgamma(static_cast<double>(n - k + 1)) + static_cast<double>(k) * std::log(p) +
           static_cast<double>(n - k) * std::log1p(-p);
}

// two-sided equal-tail exact binomial band: smallest [lo, hi] with
// P(X < lo) <= alpha/2 and P(X > hi) <= alpha/2
struct CountBand {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

inline CountBand binomial_band(std::int64_t n, double p, double alpha) {
    CountBand band{0, n};
    double cdf = 0.0;
    for (std::int64_t k = 0; k <= n; ++k) {
        cdf += std::exp(log_binom_pmf(n, k, p));
        if (cdf <= alpha / 2.0) band.lo = k + 1;
        if (cdf < 1.0 - alpha / 2.0) band.hi = k + 1;  // first k with upper tail <= alpha/2
    }
    if (band.hi > n) band.hi = n;
    return band;
}

}  // namespace testutil
