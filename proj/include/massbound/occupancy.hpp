#pragma once

namespace massbound {

// Per-symbol machinery behind the missing-mass tail bounds. A symbol of
// mass p survives an n-sample with probability q = (1-p)^n; its centered,
// p-weighted occupancy indicator admits the two MGF bounds below, which the
// Chernoff method turns into the tail estimates of TailBound.

// (1-p)^n computed as exp(n log1p(-p)); exact 1 at p = 0 and 0 at p = 1,
// where the naive power silently under/overshoots.
double survival_prob(double p, long long n);

// Upper-tail MGF slack, log domain (>= 0, with equality at lambda = 0):
//   p lambda^2/(4n) - log[ q e^{lambda(p - pq)} + (1-q) e^{-lambda p q} ]
double occupancy_mgf_gap_upper(long long n, double p, double lambda);

// Lower-tail MGF slack, log domain (>= 0); c0 is injected from the extremal
// module, never hard-coded:
//   p lambda^2/(C0 n) - log[ q e^{lambda(pq - p)} + (1-q) e^{lambda p q} ]
double occupancy_mgf_gap_lower(long long n, double p, double lambda, double c0);

// Tail estimates for the missing mass U_n at deviation epsilon:
//   P(U_n > E U_n + eps) <= e^{-n eps^2}          (upper)
//   P(U_n < E U_n - eps) <= e^{-C0 n eps^2 / 4}   (lower)
// legacy_lower carries the older e^{-(e/2) n eps^2} for comparison; since
// C0/4 > e/2 the new bound is always at least as small.
struct TailBound {
    long long n = 0;
    double epsilon = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    double legacy_lower = 0.0;
    double lambda_upper = 0.0;  // optimizing Chernoff parameter 2 n eps
    double lambda_lower = 0.0;  // optimizing Chernoff parameter C0 n eps / 2
};

// Fills the upper field (and its lambda); verifies internally that the
// Chernoff exponent lambda^2/4n - lambda eps at lambda = 2 n eps reproduces
// -n eps^2.
TailBound upper_tail_bound(long long n, double epsilon);

// Fills lower and legacy_lower with the given c0.
TailBound lower_tail_bound(long long n, double epsilon, double c0);

// Both tails in one record.
TailBound tail_bound(long long n, double epsilon, double c0);

// Auxiliary facts the occupancy MGF bounds rest on, exposed so the
// verification suites can check each on its own grid.

// L(q) = (1-2q) log(1/q) / log((1-q)/q), <= 1 on (0,1). 0/0 at q = 1/2;
// the limit log(2)/2 is substituted within 1e-7 of it.
double occupancy_fact_ratio(double q);

// log(1/(1-p))/p, >= 1 on (0,1) by the Taylor expansion.
double occupancy_fact_logfactor(double p);

// log(q/(1-q)) / ((2q-1) log(1/q)), nondecreasing on (1/2, 1) with limit
// 2/log 2 at 1/2+, so 4 times it stays above 8/log 2 > C0. Evaluated via
// atanh to keep precision next to q = 1/2.
double occupancy_fact_monotone(double q);

// f(q) = log((1-q)/q) - (1-2q) log(1/q), >= 0 on (0, 1/2).
double occupancy_fact_gap(double q);

}  // namespace massbound
