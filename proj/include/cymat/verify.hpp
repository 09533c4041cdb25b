#pragma once

#include <string>

#include "cymat/codebuild.hpp"

namespace cymat {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string json; // detailed check-by-check report
};

/// Property suites behind `verify --suite ...`.  Fixed seeds; each check
/// contributes a named pass/fail entry to the JSON report.
SuiteResult run_core_suite(uint64_t seed = 0x5eed);
SuiteResult run_iso_suite(uint64_t seed = 0x5eed);
SuiteResult run_duality_suite(uint64_t seed = 0x5eed);

} // namespace cymat
