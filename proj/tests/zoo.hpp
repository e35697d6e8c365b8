#pragma once

#include <vector>

#include "massbound/distribution.hpp"

// The small-distribution zoo used across the test suites: k <= 4, mixed
// shapes, one member with a zero-mass atom and one lopsided explicit law.
namespace testutil {

inline std::vector<massbound::DiscreteDistribution> zoo() {
    return {
        massbound::make_uniform(1),
        massbound::make_uniform(2),
        massbound::make_uniform(3),
        massbound::make_uniform(4),
        massbound::make_zipf(3, 1.0),
        massbound::make_zipf(4, 1.5),
        massbound::make_truncated_geometric(4, 0.5),
        massbound::make_explicit({0.9, 0.1}),
        massbound::make_explicit({0.7, 0.2, 0.1, 0.0}),
    };
}

}  // namespace testutil
