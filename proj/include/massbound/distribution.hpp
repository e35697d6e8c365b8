#pragma once

#include <string>
#include <vector>

namespace massbound {

enum class DistributionKind { uniform, zipf, truncated_geometric, explicit_atoms };

// A finite sampling law (p_1, ..., p_k). Infinite-support families are
// truncated to k atoms and renormalized; the tail bounds are
// distribution-free, so nothing is lost for bound checking, and the
// truncation is visible in the kind tag.
struct DiscreteDistribution {
    std::vector<double> atoms;  // nonnegative, summing to 1 within 1e-12
    DistributionKind kind = DistributionKind::explicit_atoms;
    std::string tag;            // e.g. "zipf(3,1)" - records kind and parameters
    bool has_zero_atoms = false;

    int size() const { return static_cast<int>(atoms.size()); }
};

// p_j = 1/k, j = 1..k.
DiscreteDistribution make_uniform(int k);

// p_j proportional to j^{-alpha}, renormalized over j <= k.
DiscreteDistribution make_zipf(int k, double alpha);

// p_j proportional to rho^{j-1}(1-rho), renormalized over j <= k.
DiscreteDistribution make_truncated_geometric(int k, double rho);

// Atoms as given, normalized to sum 1. Zero atoms are kept (and flagged);
// negative entries, NaNs and all-zero lists are rejected.
DiscreteDistribution make_explicit(const std::vector<double>& weights);

// Parses CLI specs: "uniform:K", "zipf:K:ALPHA", "geometric:K:RHO"
// (alias "truncated-geometric"), "explicit:P1,P2,...".
DiscreteDistribution parse_distribution_spec(const std::string& spec);

// E U_n = sum_j p_j (1-p_j)^n: each atom is missing with probability
// (1-p_j)^n. Lies in [0,1] and is nonincreasing in n.
double expected_missing_mass(const DiscreteDistribution& dist, long long n);

}  // namespace massbound
