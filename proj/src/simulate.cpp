#include "massbound/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "massbound/checks.hpp"
#include "massbound/occupancy.hpp"

namespace massbound {

WilsonInterval wilson_99(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::domain_error("wilson_99 requires trials >= 1");
    if (successes > trials) throw std::domain_error("wilson_99 requires successes <= trials");
    // z = Phi^{-1}(0.995), two-sided 99%
    constexpr double z = 2.5758293035489008;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (phat + 0.5 * z2n) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + 0.25 * z2n / n) / denom;
    WilsonInterval w;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    // rounding can nudge the limits across the point estimate; the interval
    // must contain it
    w.lo = std::min(w.lo, phat);
    w.hi = std::max(w.hi, phat);
    return w;
}

CategoricalSampler::CategoricalSampler(const DiscreteDistribution& dist) {
    if (dist.atoms.empty()) throw std::invalid_argument("empty distribution");
    cumulative_.reserve(dist.atoms.size());
    double acc = 0.0;
    for (double p : dist.atoms) {
        acc += p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;  // guard the final bucket against rounding
}

int CategoricalSampler::draw(RngStream& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto idx = static_cast<size_t>(it - cumulative_.begin());
    return static_cast<int>(std::min(idx, cumulative_.size() - 1));
}

namespace {

double missing_mass_draw(const DiscreteDistribution& dist, const CategoricalSampler& sampler,
                         long long n, RngStream& rng, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    for (long long i = 0; i < n; ++i) seen[static_cast<size_t>(sampler.draw(rng))] = 1;
    double mass = 0.0;
    for (size_t j = 0; j < dist.atoms.size(); ++j) {
        if (!seen[j]) mass += dist.atoms[j];
    }
    return mass;
}

double independent_draw(const DiscreteDistribution& dist, const std::vector<double>& survival,
                        RngStream& rng) {
    double mass = 0.0;
    for (size_t j = 0; j < dist.atoms.size(); ++j) {
        // q_j = 1 still contributes nothing when p_j = 0
        if (rng.bernoulli(survival[j])) mass += dist.atoms[j];
    }
    return mass;
}

std::vector<double> survival_table(const DiscreteDistribution& dist, long long n) {
    std::vector<double> q;
    q.reserve(dist.atoms.size());
    for (double p : dist.atoms) q.push_back(survival_prob(p, n));
    return q;
}

MomentSummary summarize(const std::vector<double>& samples) {
    const double count = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples) sum += x;
    const double mean = sum / count;
    double m2 = 0.0, m4 = 0.0;
    for (double x : samples) {
        const double d = x - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= count;
    m4 /= count;
    MomentSummary s;
    s.mean = mean;
    s.variance = samples.size() > 1 ? m2 * count / (count - 1.0) : 0.0;
    s.mean_std_error = std::sqrt(m2 / count);
    s.variance_std_error = std::sqrt(std::max(0.0, m4 - m2 * m2) / count);
    return s;
}

}  // namespace

double sample_missing_mass(const DiscreteDistribution& dist, long long n, RngStream& rng) {
    detail::require_sample_size(n);
    const CategoricalSampler sampler(dist);
    std::vector<char> seen(dist.atoms.size(), 0);
    return missing_mass_draw(dist, sampler, n, rng, seen);
}

double sample_independent_analogue(const DiscreteDistribution& dist, long long n, RngStream& rng) {
    detail::require_sample_size(n);
    return independent_draw(dist, survival_table(dist, n), rng);
}

TailExperimentResult run_tail_experiment(const DiscreteDistribution& dist, const SampleConfig& config,
                                         double c0) {
    detail::require_sample_size(config.n, "n");
    if (config.trials < 1) throw std::domain_error("trials must be >= 1");
    for (double eps : config.epsilon_list) detail::require_positive(eps, "epsilon");
    detail::require_positive(c0, "c0");

    TailExperimentResult result;
    result.n = config.n;
    result.trials = config.trials;
    result.seed = config.seed;
    result.expected_mass = expected_missing_mass(dist, config.n);

    const CategoricalSampler sampler(dist);
    std::vector<char> seen(dist.atoms.size(), 0);
    std::vector<double> samples(static_cast<size_t>(config.trials));
    for (long long i = 0; i < config.trials; ++i) {
        RngStream rng(config.seed, 2 * static_cast<std::uint64_t>(i));
        samples[static_cast<size_t>(i)] = missing_mass_draw(dist, sampler, config.n, rng, seen);
    }
    result.dependent = summarize(samples);

    const double trials = static_cast<double>(config.trials);
    for (double eps : config.epsilon_list) {
        TailFrequency f;
        f.epsilon = eps;
        std::uint64_t above = 0, below = 0;
        for (double u : samples) {
            if (u > result.expected_mass + eps) ++above;
            if (u < result.expected_mass - eps) ++below;
        }
        f.empirical_upper = static_cast<double>(above) / trials;
        f.empirical_lower = static_cast<double>(below) / trials;
        f.wilson_upper = wilson_99(above, static_cast<std::uint64_t>(config.trials));
        f.wilson_lower = wilson_99(below, static_cast<std::uint64_t>(config.trials));
        f.bound_upper = std::exp(-static_cast<double>(config.n) * eps * eps);
        f.bound_lower = std::exp(-c0 * static_cast<double>(config.n) * eps * eps / 4.0);
        if (f.wilson_upper.lo > f.bound_upper || f.wilson_lower.lo > f.bound_lower) {
            result.domination_pass = false;
        }
        result.frequencies.push_back(f);
    }

    if (config.compare_independent) {
        const std::vector<double> q = survival_table(dist, config.n);
        std::vector<double> indep(static_cast<size_t>(config.trials));
        for (long long i = 0; i < config.trials; ++i) {
            RngStream rng(config.seed, 2 * static_cast<std::uint64_t>(i) + 1);
            indep[static_cast<size_t>(i)] = independent_draw(dist, q, rng);
        }
        result.independent = summarize(indep);
    }
    return result;
}

}  // namespace massbound
