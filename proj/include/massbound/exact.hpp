#pragma once

#include <vector>

#include "massbound/distribution.hpp"

namespace massbound {

enum class ExactProvenance { dependent_enumeration, independent_enumeration };

// Exact finite law of U_n (or U_n') from brute-force enumeration: sorted
// distinct support, matching probabilities summing to 1 within 1e-12.
// Support values closer than 1e-12 are merged (symmetric atoms make distinct
// missing-sets collide on the same mass).
struct ExactDistribution {
    std::vector<double> support;  // strictly increasing
    std::vector<double> probs;    // all > 0
    ExactProvenance provenance = ExactProvenance::dependent_enumeration;

    double mean() const;
    double variance() const;
};

// Law of the missing mass U_n by enumerating all k^n sample sequences in
// lexicographic order (probabilities in compensated summation). Guarded by
// k^n <= 1e7 and k <= 30: exactness is the whole point, so oversized
// instances are a hard error, never a truncation.
ExactDistribution exact_missing_mass_distribution(const DiscreteDistribution& dist, long long n);

// Law of the independent analogue U_n' by enumerating all 2^k indicator
// patterns, pattern probability prod q_j^{xi_j} (1-q_j)^{1-xi_j}. Guarded by
// 2^k <= 1e7.
ExactDistribution exact_independent_distribution(const DiscreteDistribution& dist, long long n);

enum class TailDirection { above, below };

// Strict-inequality tail mass: P(U > threshold) or P(U < threshold).
double exact_tail(const ExactDistribution& law, TailDirection direction, double threshold);

// E e^{lambda U} = sum probs e^{lambda value}, largest exponent factored out.
double exact_mgf(const ExactDistribution& law, double lambda);

}  // namespace massbound
