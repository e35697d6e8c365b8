#include "massbound/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "massbound/checks.hpp"
#include "massbound/occupancy.hpp"

namespace massbound {

namespace {

constexpr double kEnumerationLimit = 1e7;
constexpr int kMaxAtomsForMask = 30;
constexpr double kMergeTolerance = 1e-12;

// compensated (Kahan) accumulator: k^n tiny terms drift otherwise
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

ExactDistribution build_law(std::vector<std::pair<double, double>> value_probs,
                            ExactProvenance provenance) {
    std::sort(value_probs.begin(), value_probs.end());

    ExactDistribution law;
    law.provenance = provenance;
    KahanSum total;
    for (const auto& [value, prob] : value_probs) {
        if (prob <= 0.0) continue;
        if (!law.support.empty() && value - law.support.back() < kMergeTolerance) {
            law.probs.back() += prob;
        } else {
            law.support.push_back(value);
            law.probs.push_back(prob);
        }
        total.add(prob);
    }
    if (std::fabs(total.sum - 1.0) > 1e-12) {
        throw std::logic_error("exact enumeration: probabilities sum to " + std::to_string(total.sum));
    }
    return law;
}

void check_instance_size(double states, const char* what) {
    if (states > kEnumerationLimit) {
        throw std::length_error(std::string("exact enumeration too large: ") + what +
                                " exceeds 1e7 states");
    }
}

}  // namespace

double ExactDistribution::mean() const {
    KahanSum m;
    for (size_t i = 0; i < support.size(); ++i) m.add(support[i] * probs[i]);
    return m.sum;
}

double ExactDistribution::variance() const {
    const double mu = mean();
    KahanSum v;
    for (size_t i = 0; i < support.size(); ++i) {
        const double d = support[i] - mu;
        v.add(d * d * probs[i]);
    }
    return v.sum;
}

ExactDistribution exact_missing_mass_distribution(const DiscreteDistribution& dist, long long n) {
    detail::require_sample_size(n);
    const int k = dist.size();
    if (k > kMaxAtomsForMask) {
        throw std::length_error("exact enumeration supports at most 30 atoms");
    }
    if (k == 1) {
        // the single symbol is always observed, for any n
        return build_law({{0.0, 1.0}}, ExactProvenance::dependent_enumeration);
    }
    check_instance_size(std::pow(static_cast<double>(k), static_cast<double>(n)), "k^n");

    // Aggregate sequence probabilities by the set of observed symbols; the
    // missing mass depends on the sequence only through that set.
    std::unordered_map<std::uint32_t, KahanSum> mass_by_observed;
    std::vector<int> seq(static_cast<size_t>(n), 0);  // lexicographic odometer
    while (true) {
        double prob = 1.0;
        std::uint32_t observed = 0;
        for (int idx : seq) {
            prob *= dist.atoms[static_cast<size_t>(idx)];
            observed |= (1u << idx);
        }
        if (prob > 0.0) mass_by_observed[observed].add(prob);

        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == k - 1) {
            seq[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)];
    }

    std::vector<std::pair<double, double>> value_probs;
    value_probs.reserve(mass_by_observed.size());
    for (const auto& [observed, prob] : mass_by_observed) {
        KahanSum missing;
        for (int j = 0; j < k; ++j) {
            if (!(observed & (1u << j))) missing.add(dist.atoms[static_cast<size_t>(j)]);
        }
        value_probs.emplace_back(missing.sum, prob.sum);
    }
    return build_law(std::move(value_probs), ExactProvenance::dependent_enumeration);
}

ExactDistribution exact_independent_distribution(const DiscreteDistribution& dist, long long n) {
    detail::require_sample_size(n);
    const int k = dist.size();
    if (k > kMaxAtomsForMask) {
        throw std::length_error("exact enumeration supports at most 30 atoms");
    }
    check_instance_size(std::pow(2.0, static_cast<double>(k)), "2^k");

    std::vector<double> q;
    q.reserve(static_cast<size_t>(k));
    for (double p : dist.atoms) q.push_back(survival_prob(p, n));

    std::vector<std::pair<double, double>> value_probs;
    value_probs.reserve(1u << k);
    for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
        double prob = 1.0;
        KahanSum value;
        for (int j = 0; j < k; ++j) {
            if (pattern & (1u << j)) {
                prob *= q[static_cast<size_t>(j)];
                value.add(dist.atoms[static_cast<size_t>(j)]);
            } else {
                prob *= 1.0 - q[static_cast<size_t>(j)];
            }
        }
        if (prob > 0.0) value_probs.emplace_back(value.sum, prob);
    }
    return build_law(std::move(value_probs), ExactProvenance::independent_enumeration);
}

double exact_tail(const ExactDistribution& law, TailDirection direction, double threshold) {
    detail::require_finite(threshold, "threshold");
    KahanSum mass;
    for (size_t i = 0; i < law.support.size(); ++i) {
        const bool in_tail = direction == TailDirection::above ? law.support[i] > threshold
                                                               : law.support[i] < threshold;
        if (in_tail) mass.add(law.probs[i]);
    }
    return mass.sum;
}

double exact_mgf(const ExactDistribution& law, double lambda) {
    detail::require_finite(lambda, "lambda");
    double max_exponent = -std::numeric_limits<double>::infinity();
    for (double v : law.support) max_exponent = std::max(max_exponent, lambda * v);
    KahanSum scaled;
    for (size_t i = 0; i < law.support.size(); ++i) {
        scaled.add(law.probs[i] * std::exp(lambda * law.support[i] - max_exponent));
    }
    return std::exp(max_exponent) * scaled.sum;
}

}  // namespace massbound
