#pragma once

// Randomized verification suites behind the CLI: each suite draws
// deterministic per-trial instances, checks one family of identities, and
// reports the worst relative residual against a pinned tolerance.

#include <json.hpp>
#include <string>
#include <vector>

#include "sigmaor/curve.hpp"

namespace sigmaor {

struct RunConfig {
    Complex tau{0.0, 1.0};
    int d = 3;
    long long torsion_bound = 6;
    int trials = 0;       // 0 = suite default
    std::uint64_t seed = 0;
    double tol = 0.0;     // 0 = suite default
    int degree_cap = 4;
    int jobs = 1;

    void validate() const;
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

/// All suite names in canonical order (excludes the "all" alias).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Runs the named suites ("all" expands) and assembles the JSON report,
/// schema version "1".  Timing fields are the only nondeterministic part.
nlohmann::json run_report(const std::vector<std::string>& names, const RunConfig& cfg);

}  // namespace sigmaor
