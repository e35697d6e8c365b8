#pragma once

#include <vector>

namespace massbound {

// count evenly spaced points over [lo, hi], endpoints included (count >= 2).
std::vector<double> linspace(double lo, double hi, int count);

// Probability grid equally spaced in logit(p) = log(p/(1-p)) over
// [p_min, 1-p_min], mirrored so that p[i] == 1 - p[count-1-i] exactly and the
// midpoint of an odd-count grid is exactly 0.5. Dense near both endpoints,
// which is where the Kearns-Saul coefficient degenerates.
std::vector<double> logit_grid(int count, double p_min = 1e-6);

// Upper half of the mirrored logit grid: count points over [0.5, p_max].
std::vector<double> logit_grid_upper(int count, double p_max = 1.0 - 1e-6);

// Lower half: count points over [p_min, 0.5].
std::vector<double> logit_grid_lower(int count, double p_min = 1e-6);

}  // namespace massbound
