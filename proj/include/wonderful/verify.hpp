#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wonderful {

struct CheckResult {
    std::string suite;
    std::string check;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite (or "all") over n <= max_n, d <= max_dim.
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::size_t max_n, unsigned max_dim, std::size_t cap);

}  // namespace wonderful
