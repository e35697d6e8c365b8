#pragma once

namespace massbound {

// Result of locating the maximizer of f(x) = x(1-x) log(1/x) on (0, 1/2).
// The lower-tail exponent constant is C0 = inf 2/f(x) = 2/f(x0) ~ 7.6821,
// attained at x0 ~ 0.2356.
struct ExtremalResult {
    double x0 = 0.0;        // maximizer, in (0, 1/2)
    double f_at_x0 = 0.0;   // f(x0), the max over every probe evaluated
    double c0 = 0.0;        // 2 / f_at_x0, exactly as recorded
    int iterations = 0;
    double tolerance = 0.0;
};

// f(x) = x(1-x) log(1/x); positive on (0,1), vanishing at both ends.
double f_objective(double x);

// Golden-section search for the maximizer of f_objective on (0, 1/2).
// The critical point is unique there, so the objective is unimodal and the
// bracketing search is guaranteed. Throws if the iteration cap (500) is hit.
ExtremalResult find_x0(double tolerance);

// C0 = 2 / f(x0), computed to the given x-tolerance.
double compute_c0(double tolerance);

// C0 at tolerance 1e-12, computed once and cached. Single source of truth
// for the tail-bound modules; the display value 7.6821 is never hard-coded.
double default_c0();

}  // namespace massbound
