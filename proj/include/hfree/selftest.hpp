#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hfree {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Names of the acceptance checks, in run order.
const std::vector<std::string>& acceptance_check_names();

// Runs the named checks (all of them when names is empty) and returns the
// results; on_result fires after each check when non-null.  Throws
// InputError on an unknown name.
std::vector<CheckResult> run_acceptance_checks(
    const std::vector<std::string>& names,
    const std::function<void(const CheckResult&)>& on_result = nullptr);

}  // namespace hfree
