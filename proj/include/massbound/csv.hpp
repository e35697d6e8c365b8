#pragma once

#include <string>
#include <vector>

#include "massbound/exact.hpp"
#include "massbound/extremal.hpp"
#include "massbound/occupancy.hpp"
#include "massbound/simulate.hpp"
#include "massbound/verify.hpp"

namespace massbound {

// 17 significant digits: round-trip exact for doubles, so identical runs
// yield byte-identical artifacts.
std::string format_double(double x);

// Every document starts with the artifact version and the canonical JSON of
// the config that produced it, as '#' comment lines.
std::string csv_preamble(const std::string& canonical_config_json);

std::string constants_csv(const ExtremalResult& result);

std::string bounds_csv(const std::vector<TailBound>& bounds);

std::string simulate_csv(const TailExperimentResult& result);

// Exact laws as (value, probability, provenance) rows followed by '#'
// summary lines: means, variances, the worst MGF-domination slack over the
// lambda grid, and the raw-tail domination probe. The raw-tail lines are
// informational: strict tail domination between U_n and U_n' can genuinely
// fail at atoms of the law even though MGF domination (what the tail
// tail bounds actually consume) holds.
std::string oracle_csv(const ExactDistribution& dependent, const ExactDistribution& independent,
                       const std::vector<double>& lambda_grid);

// Verification suites: one '# report <label>' section per gap report with
// (p, t, lhs_log, rhs_log, gap) rows, and per-p (p, t, sign) sections for
// sign scans, which are explicitly labeled as non-probative evidence.
std::string verify_csv(const std::vector<SuiteResult>& suites);

// Writes content to path ("-" for stdout). File output goes through a
// temporary and is renamed into place, so failed runs leave nothing behind.
void write_output(const std::string& path, const std::string& content);

}  // namespace massbound
