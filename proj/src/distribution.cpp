#include "massbound/distribution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "massbound/checks.hpp"
#include "massbound/occupancy.hpp"

namespace massbound {

namespace {

DiscreteDistribution finish(std::vector<double> weights, DistributionKind kind, std::string tag) {
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("distribution weights must be finite and nonnegative");
        }
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("distribution weights must not all be zero");

    DiscreteDistribution dist;
    dist.kind = kind;
    dist.tag = std::move(tag);
    dist.atoms.reserve(weights.size());
    for (double w : weights) {
        const double p = w / total;
        dist.atoms.push_back(p);
        if (p == 0.0) dist.has_zero_atoms = true;
    }
    return dist;
}

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("distribution needs at least one atom (k >= 1)");
}

}  // namespace

DiscreteDistribution make_uniform(int k) {
    require_k(k);
    return finish(std::vector<double>(static_cast<size_t>(k), 1.0),
                  DistributionKind::uniform, "uniform(" + std::to_string(k) + ")");
}

DiscreteDistribution make_zipf(int k, double alpha) {
    require_k(k);
    detail::require_positive(alpha, "alpha");
    std::vector<double> w(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) w[static_cast<size_t>(j - 1)] = std::pow(j, -alpha);
    std::ostringstream tag;
    tag << "zipf(" << k << "," << alpha << ")";
    return finish(std::move(w), DistributionKind::zipf, tag.str());
}

DiscreteDistribution make_truncated_geometric(int k, double rho) {
    require_k(k);
    detail::require_finite(rho, "rho");
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
    std::vector<double> w(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) w[static_cast<size_t>(j - 1)] = std::pow(rho, j - 1) * (1.0 - rho);
    std::ostringstream tag;
    tag << "truncated-geometric(" << k << "," << rho << ")";
    return finish(std::move(w), DistributionKind::truncated_geometric, tag.str());
}

DiscreteDistribution make_explicit(const std::vector<double>& weights) {
    if (weights.empty()) throw std::invalid_argument("explicit distribution needs at least one atom");
    return finish(weights, DistributionKind::explicit_atoms,
                  "explicit(" + std::to_string(weights.size()) + ")");
}

DiscreteDistribution parse_distribution_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("distribution spec must look like kind:params, got '" + spec + "'");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, sep)) parts.push_back(item);
        return parts;
    };
    auto to_int = [&](const std::string& s) {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer in distribution spec: '" + s + "'");
        return v;
    };
    auto to_double = [&](const std::string& s) {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number in distribution spec: '" + s + "'");
        return v;
    };

    try {
        if (kind == "uniform") {
            return make_uniform(to_int(rest));
        } else if (kind == "zipf") {
            const auto parts = split(rest, ':');
            if (parts.size() != 2) throw std::invalid_argument("zipf spec is zipf:K:ALPHA");
            return make_zipf(to_int(parts[0]), to_double(parts[1]));
        } else if (kind == "geometric" || kind == "truncated-geometric") {
            const auto parts = split(rest, ':');
            if (parts.size() != 2) throw std::invalid_argument("geometric spec is geometric:K:RHO");
            return make_truncated_geometric(to_int(parts[0]), to_double(parts[1]));
        } else if (kind == "explicit") {
            const auto parts = split(rest, ',');
            std::vector<double> w;
            w.reserve(parts.size());
            for (const auto& s : parts) w.push_back(to_double(s));
            return make_explicit(w);
        }
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("number out of range in distribution spec '" + spec + "'");
    }
    throw std::invalid_argument("unknown distribution kind '" + kind + "'");
}

double expected_missing_mass(const DiscreteDistribution& dist, long long n) {
    detail::require_sample_size(n);
    double total = 0.0;
    for (double p : dist.atoms) total += p * survival_prob(p, n);
    return total;
}

}  // namespace massbound
