#pragma once

// Self-checks of the kernel against independent reference computations,
// grouped into named suites. Used by `ncsf verify` and the acceptance binary.

#include <optional>
#include <string>
#include <vector>

namespace ncsf {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Number of cases examined, or the first failing case.
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// worked-examples, basis-change, oracle, mobius, omega, inner, projection,
/// schur, jacobi-trudi, rsk.
const std::vector<std::string>& suite_names();

/// Runs one suite. `max_n` caps every size parameter (degree, ground set,
/// biword length, truncation degree). Throws SemanticError for an unknown name.
SuiteResult run_suite(const std::string& name, std::optional<int> max_n = std::nullopt);

}  // namespace ncsf
