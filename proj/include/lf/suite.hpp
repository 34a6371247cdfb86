#pragma once

#include <string>
#include <vector>

#include "lf/potentials.hpp"

namespace lf {

struct CheckResult {
    std::string check_id;
    bool pass = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
};

struct SuiteOptions {
    // Replaces the builtin with the same lattice and periods in example checks.
    std::vector<PeriodicPotential> overrides;
};

const std::vector<std::string>& suite_names();

// Runs one of all, tri, hex, ehm, lemmas, floquet. Checks run in parallel and
// are reported in a fixed order.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

// JSON report: {"schema": 1, "suite": ..., "passed": ..., "checks": [...]}.
std::string report_json(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace lf
