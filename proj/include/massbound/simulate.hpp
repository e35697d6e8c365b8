#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "massbound/distribution.hpp"
#include "massbound/rng.hpp"

namespace massbound {

// 99% two-sided Wilson score interval for a binomial proportion. Chosen over
// the normal approximation because the tail frequencies under test sit near 0.
struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};
WilsonInterval wilson_99(std::uint64_t successes, std::uint64_t trials);

// Inverse-CDF categorical sampler over the atom list: precomputed cumulative
// table, binary search per draw.
class CategoricalSampler {
public:
    explicit CategoricalSampler(const DiscreteDistribution& dist);
    int draw(RngStream& rng) const;

private:
    std::vector<double> cumulative_;
};

// One realization of the missing mass U_n: draw n iid indices, sum the mass
// of the atoms never observed.
double sample_missing_mass(const DiscreteDistribution& dist, long long n, RngStream& rng);

// One realization of the independent analogue U_n': each atom independently
// keeps its mass with probability q_j = (1-p_j)^n. Same mean as U_n.
double sample_independent_analogue(const DiscreteDistribution& dist, long long n, RngStream& rng);

struct SampleConfig {
    long long n = 1;
    long long trials = 1;
    std::uint64_t seed = 0;
    std::vector<double> epsilon_list;
    // when set, also simulates U_n' (on disjoint RNG streams) so dispersions
    // can be compared
    bool compare_independent = false;
};

struct TailFrequency {
    double epsilon = 0.0;
    double empirical_upper = 0.0;       // frequency of U > E U + eps (strict)
    WilsonInterval wilson_upper;
    double bound_upper = 0.0;           // e^{-n eps^2}
    double empirical_lower = 0.0;       // frequency of U < E U - eps (strict)
    WilsonInterval wilson_lower;
    double bound_lower = 0.0;           // e^{-C0 n eps^2/4}
};

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;        // unbiased sample variance
    double mean_std_error = 0.0;
    double variance_std_error = 0.0;  // sqrt((m4 - m2^2)/trials)
};

struct TailExperimentResult {
    long long n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    double expected_mass = 0.0;  // sum_j p_j (1-p_j)^n
    std::vector<TailFrequency> frequencies;
    MomentSummary dependent;
    std::optional<MomentSummary> independent;
    // true iff no Wilson 99% lower limit exceeds its theoretical bound
    bool domination_pass = true;
};

// Runs config.trials independent simulations of U_n (trial i on RNG stream
// derived from (seed, 2i); the analogue, when enabled, uses (seed, 2i+1)),
// counts strict tail exceedances per epsilon, and attaches Wilson intervals
// and the theoretical bounds (computed with the supplied c0). Deterministic
// given the config.
TailExperimentResult run_tail_experiment(const DiscreteDistribution& dist, const SampleConfig& config,
                                         double c0);

}  // namespace massbound
