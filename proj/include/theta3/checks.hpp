#pragma once

#include <string>
#include <vector>

namespace theta3 {

/// Outcome of one named property suite.
struct CheckOutcome {
    std::string suite;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // one line per failed property

    bool ok() const { return failed == 0; }
};

std::vector<std::string> check_suite_names();

/// Runs a named property suite ("all" runs every suite in order). Unknown
/// names raise UnknownSuite.
std::vector<CheckOutcome> run_check(const std::string& name, double tolerance = 1e-6);

}  // namespace theta3
