#include "massbound/extremal.hpp"

#include <cmath>
#include <stdexcept>

#include "massbound/checks.hpp"

namespace massbound {

double f_objective(double x) {
    detail::require_finite(x, "x");
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("f_objective requires x in (0,1)");
    return -x * (1.0 - x) * std::log(x);
}

ExtremalResult find_x0(double tolerance) {
    detail::require_positive(tolerance, "tolerance");

    constexpr int kMaxIterations = 500;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

    double lo = 1e-6;
    double hi = 0.5 - 1e-6;

    ExtremalResult result;
    result.tolerance = tolerance;

    // track the best probe seen so the reported maximum is a value f
    // actually attained
    auto probe = [&](double x) {
        const double fx = f_objective(x);
        if (fx > result.f_at_x0) {
            result.f_at_x0 = fx;
            result.x0 = x;
        }
        return fx;
    };

    double a = hi - invphi * (hi - lo);
    double b = lo + invphi * (hi - lo);
    double fa = probe(a);
    double fb = probe(b);

    int iter = 0;
    while (hi - lo > tolerance) {
        if (++iter > kMaxIterations) {
            throw std::runtime_error("find_x0: golden-section search failed to converge");
        }
        if (fa > fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - invphi * (hi - lo);
            fa = probe(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + invphi * (hi - lo);
            fb = probe(b);
        }
    }
    result.iterations = iter;
    result.c0 = 2.0 / result.f_at_x0;
    return result;
}

double compute_c0(double tolerance) { return find_x0(tolerance).c0; }

double default_c0() {
    static const double c0 = compute_c0(1e-12);
    return c0;
}

}  // namespace massbound
