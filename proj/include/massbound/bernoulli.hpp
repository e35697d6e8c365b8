#pragma once

#include <vector>

#include "massbound/report.hpp"

namespace massbound {

// Everything below concerns the centered Bernoulli(p) variable X with
// P(X = 1-p) = p, P(X = -p) = 1-p, whose MGF is
//   f(t) = E e^{tX} = (1-p) e^{-tp} + p e^{t(1-p)}.

// log f(t), evaluated by factoring out the larger exponent so that |t| up to
// a few hundred stays finite. Exactly 0 at t = 0 and for p in {0, 1}.
double centered_bernoulli_mgf_log(double p, double t);

// log of the Hoeffding MGF bound for an [a,b]-valued centered variable:
// (b-a)^2 t^2 / 8.
double hoeffding_log_bound(double t, double a, double b);

// Kearns-Saul variance proxy c(p) = (1-2p) / (4 log((1-p)/p)).
//
// The closed form is 0/0 at p = 1/2; within 1e-4 of 1/2 the second-order
// series 1/8 - (p - 1/2)^2/6 is used instead. Limits at p in {0, 1} are 0.
// Satisfies c(p) = c(1-p) and 0 <= c(p) <= 1/8 with equality only at p = 1/2.
double ks_coefficient(double p);

// Slack of the Kearns-Saul inequality in log domain:
//   c(p) t^2 - log f(t) >= 0  for all p in [0,1], t real,
// with equality at t = 0 and at t = t_star(p).
double ks_gap(double p, double t);

// Slack of the refined bound p(1-p) t^2/2 - log f(t) >= 0, valid for
// p in [1/2, 1] and t >= 0 only; inputs outside that domain are rejected.
double refined_gap(double p, double t);

// g(t) = log f(t) / t^2, the quantity the Kearns-Saul coefficient maximizes.
// For |t| < 1e-5 the cumulant expansion p(1-p)/2 + p(1-p)(1-2p) t/6 is
// returned; direct evaluation there divides two vanishing quantities.
double g_exponent(double p, double t);

// Critical point t* = 2 log((1-p)/p): the unique known zero of g', where
// g(t*) = c(p) and the Kearns-Saul inequality is tight. Requires p in (0,1).
double t_star(double p);

// The substituted form of the Kearns-Saul inequality (t = 2s log((1-p)/p)):
//   h_s(p) = s(s + 2p(1-s)) log((1-p)/p) - log(1 - p + p ((1-p)/p)^{2s}),
// nonnegative for all p in (0,1), s real; identically 0 at s = 0, s = 1 and
// at p = 1/2.
double h_s_value(double p, double s);

// Closed form of the second derivative of h_s with respect to p:
//   [((mu-1)p^2 - s + p(1 - mu + s + mu s)) / (p(1-p)(1 + (mu-1)p))]^2
// with mu = ((1-p)/p)^{2s}. A square, hence >= 0, which is what makes h_s
// convex and the inequality follow. The denominator 1 + (mu-1)p = 1-p+p*mu
// is positive for p in (0,1); that is asserted at runtime rather than
// assumed. Overflow of mu is handled by the algebraic mu->inf / mu->0
// limits of the ratio.
double h_s_second_derivative(double p, double s);

// Numerical sign scan of g'(t) across t_grid via central differences
// (step 1e-4). The expected pattern is + on (-inf, t*), 0 at t*, - on
// (t*, inf); deviations are collected in the report. This gathers evidence
// only: the pattern is unproven and the scan proves nothing.
//
// The grid must be strictly increasing and stay clear of t = 0 (|t| >= 0.01),
// where finite differences on g drown in rounding noise.
SignScanReport scan_g_prime_signs(double p, const std::vector<double>& t_grid);

}  // namespace massbound
