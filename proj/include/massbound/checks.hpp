#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace massbound::detail {

inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(name) + " must be finite, got " + std::to_string(x));
    }
}

inline void require_probability(double p, const char* name = "p") {
    require_finite(p, name);
    if (p < 0.0 || p > 1.0) {
        throw std::domain_error(std::string(name) + " must lie in [0,1], got " + std::to_string(p));
    }
}

inline void require_open_probability(double p, const char* name = "p") {
    require_probability(p, name);
    if (p == 0.0 || p == 1.0) {
        throw std::domain_error(std::string(name) + " must lie in the open interval (0,1)");
    }
}

inline void require_positive(double x, const char* name) {
    require_finite(x, name);
    if (x <= 0.0) {
        throw std::domain_error(std::string(name) + " must be positive, got " + std::to_string(x));
    }
}

inline void require_nonnegative(double x, const char* name) {
    require_finite(x, name);
    if (x < 0.0) {
        throw std::domain_error(std::string(name) + " must be nonnegative, got " + std::to_string(x));
    }
}

inline void require_sample_size(long long n, const char* name = "n") {
    if (n < 1) {
        throw std::domain_error(std::string(name) + " must be a positive integer, got " + std::to_string(n));
    }
}

// log(e^a + e^b) with the larger exponent factored out; tolerates -inf args.
inline double log_sum_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = a > b ? a : b;
    const double d = a > b ? b - a : a - b;
    return m + std::log1p(std::exp(d));
}

}  // namespace massbound::detail
