#pragma once

#include <string>
#include <vector>

namespace massbound {

// One checked grid point of an inequality lhs <= rhs, kept in log domain.
struct GapEntry {
    double p = 0.0;
    double t = 0.0;  // second grid coordinate: t, s or lambda depending on suite
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double gap = 0.0;  // rhs_log - lhs_log, exactly as recorded
};

// What a grid scan must establish about the gap.
enum class GapCheck {
    nonnegative,  // min_gap >= -tolerance
    zero,         // additionally max_gap <= tolerance (equality cases)
};

// Outcome of scanning an inequality over a grid. Every grid point is
// checked; `entries` keeps one representative row per slice (the worst gap
// for each p) so serialized reports stay a sane size.
struct GapReport {
    std::string label;
    std::vector<GapEntry> entries;
    double min_gap = 0.0;
    double max_gap = 0.0;
    GapEntry argmin;  // grid point attaining min_gap
    double tolerance = 0.0;
    GapCheck check = GapCheck::nonnegative;
    bool pass = false;
    long long points_checked = 0;
};

enum class DerivativeSign : char { positive = '+', zero = '0', negative = '-' };

// A grid point whose estimated g' sign contradicts the +/0/- pattern.
struct SignViolation {
    double t = 0.0;
    double g_prime = 0.0;
};

// Evidence record for the conjectured sign pattern of g' around t*.
// Never a proof; consumers must label it accordingly.
struct SignScanReport {
    double p = 0.0;
    std::vector<double> t_grid;
    std::vector<DerivativeSign> derivative_signs;
    double t_star = 0.0;
    double g_at_t_star = 0.0;
    // half-width around t* inside which a zero classification is expected,
    // sized from the local curvature of g
    double zero_zone = 0.0;
    std::vector<SignViolation> violations;
};

}  // namespace massbound
