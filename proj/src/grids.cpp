#include "massbound/grids.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace massbound {

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2) throw std::invalid_argument("linspace needs at least 2 points");
    if (!(lo <= hi)) throw std::invalid_argument("linspace needs lo <= hi");
    std::vector<double> g(static_cast<size_t>(count));
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) g[static_cast<size_t>(i)] = lo + i * step;
    g.back() = hi;
    return g;
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) { return std::log(p / (1.0 - p)); }

}  // namespace

std::vector<double> logit_grid(int count, double p_min) {
    if (count < 3) throw std::invalid_argument("logit_grid needs at least 3 points");
    if (!(p_min > 0.0 && p_min < 0.5)) throw std::invalid_argument("logit_grid needs p_min in (0, 0.5)");
    std::vector<double> g(static_cast<size_t>(count));
    const double hi = logit(1.0 - p_min);  // grid is symmetric: lo = -hi
    const double step = 2.0 * hi / (count - 1);
    const int half = count / 2;
    for (int i = 0; i < half; ++i) {
        const double p = sigmoid(-hi + i * step);
        g[static_cast<size_t>(i)] = p;
        g[static_cast<size_t>(count - 1 - i)] = 1.0 - p;
    }
    if (count % 2 == 1) g[static_cast<size_t>(half)] = 0.5;
    return g;
}

std::vector<double> logit_grid_upper(int count, double p_max) {
    if (count < 2) throw std::invalid_argument("logit_grid_upper needs at least 2 points");
    if (!(p_max > 0.5 && p_max < 1.0)) throw std::invalid_argument("logit_grid_upper needs p_max in (0.5, 1)");
    std::vector<double> g(static_cast<size_t>(count));
    const double hi = logit(p_max);
    const double step = hi / (count - 1);
    g[0] = 0.5;
    for (int i = 1; i < count; ++i) g[static_cast<size_t>(i)] = sigmoid(i * step);
    g.back() = p_max;
    return g;
}

std::vector<double> logit_grid_lower(int count, double p_min) {
    std::vector<double> g = logit_grid_upper(count, 1.0 - p_min);
    for (double& p : g) p = 1.0 - p;
    std::reverse(g.begin(), g.end());
    return g;
}

}  // namespace massbound
