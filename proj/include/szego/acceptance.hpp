#pragma once

// The ten acceptance criteria as runnable checks, shared by the acceptance
// test binary and the `suite` command.

#include <functional>
#include <string>
#include <vector>

namespace szego {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double runtime_ms = 0;
    double runtime_limit_ms = 0;
};

/// Runs the criteria in `ids` (all ten when empty), in increasing order.
/// `on_result` is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] criterion 3: weighted orthogonality (412 ms): max |<f - h, z^k>| = 2.1e-13"
std::string format_result(const CriterionResult& r);

}  // namespace szego
